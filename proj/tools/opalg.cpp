// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: loads matrices, states, and grid configurations,
// runs the verification suites, and emits machine-readable reports.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <string>

#include "opalg/calculus.hpp"
#include "opalg/gns.hpp"
#include "opalg/io.hpp"
#include "opalg/spectra.hpp"
#include "opalg/states.hpp"
#include "opalg/subalgebra.hpp"
#include "opalg/suites.hpp"
#include "opalg/version.hpp"

namespace {

using opalg::Check;
using opalg::CheckReport;
using opalg::Json;

struct CliOptions {
  std::string command;
  std::string in_path, state_path, grid_path, out_path;
  std::string format = "json";
  std::uint64_t seed = 42;
  bool seed_given = false;
  opalg::SuiteConfig cfg;
};

// Checks for a user-supplied matrix: the basic norm/spectrum laws.
CheckReport file_matrix_checks(const std::string& path, const opalg::ToleranceContext& ctx) {
  CheckReport r;
  r.suite = "input";
  const opalg::AlgebraElement a = opalg::load_matrix(path);
  const double norm = opalg::op_norm(a);
  const opalg::SpectrumResult s = opalg::spectrum(a, ctx);
  r.add("input_cstar", "||A* A|| = ||A||^2",
        std::abs(opalg::op_norm(a.adjoint() * a) - norm * norm) / std::max(1.0, norm * norm),
        1e-10);
  r.add_flag("input_spectrum_nonempty", "spectr(A) is non-empty", !s.eigenvalues.empty());
  r.add("input_radius_le_norm", "r(A) <= ||A||", s.radius - norm, 1e-9);
  return r;
}

// Checks for a user-supplied state: GNS on the full matrix algebra.
CheckReport file_state_checks(const std::string& path, const opalg::ToleranceContext& ctx) {
  CheckReport r;
  r.suite = "input";
  const opalg::DensityFunctional rho = opalg::load_state(path, ctx);
  r.add_flag("input_is_state", "rho(v) >= 0 and rho(I) = 1", opalg::is_state(rho, ctx));
  const auto algebra = opalg::SubalgebraBasis::full_matrix_algebra(rho.dim());
  const opalg::GnsResult gns = opalg::gns_construct(algebra, rho, ctx);
  const CheckReport v = opalg::verify_gns(gns, algebra, rho, ctx);
  for (const Check& c : v.checks) {
    Check copy = c;
    copy.name = "input_" + copy.name;
    r.checks.push_back(copy);
  }
  const auto kernel = opalg::left_kernel(algebra.basis, rho, ctx);
  r.add_flag("input_dimension_law", "dim H = dim algebra - dim kernel",
             static_cast<std::size_t>(gns.hilbert_dim) == algebra.size() - kernel.size());
  return r;
}

Json report_to_json(const CliOptions& opt, const CheckReport& report) {
  Json j;
  j["tool"] = std::string("opalg ") + opalg::kVersion;
  j["command"] = opt.command;
  Json cfg;
  cfg["seed"] = opt.cfg.seed;
  cfg["tol_eq"] = opt.cfg.ctx.eq_tol;
  cfg["tol_spec"] = opt.cfg.ctx.spec_tol;
  cfg["tol_rank"] = opt.cfg.ctx.rank_tol;
  cfg["grid_N"] = opt.cfg.grid_points;
  cfg["grid_L"] = opt.cfg.grid_half_width;
  cfg["depth"] = opt.cfg.integral_depth;
  cfg["cutoff"] = opt.cfg.integral_cutoff;
  cfg["moduli"] = opt.cfg.moduli;
  if (!opt.in_path.empty()) cfg["in"] = opt.in_path;
  if (!opt.state_path.empty()) cfg["state"] = opt.state_path;
  if (!opt.grid_path.empty()) cfg["grid"] = opt.grid_path;
  j["config"] = std::move(cfg);

  Json checks = Json::array();
  for (const Check& c : report.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["measured"] = c.measured;
    jc["tolerance"] = c.tolerance;
    jc["pass"] = c.pass;
    if (!c.note.empty()) jc["note"] = c.note;
    jc["time_ms"] = c.time_ms;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["pass"] = report.all_pass();
  return j;
}

std::string report_to_text(const CheckReport& report) {
  std::string out;
  for (const Check& c : report.checks) {
    out += c.pass ? "[PASS] " : "[FAIL] ";
    out += c.name + "  measured=" + std::to_string(c.measured) +
           " tolerance=" + std::to_string(c.tolerance);
    if (!c.pass) out += "  (" + c.anchor + ")";
    if (!c.note.empty()) out += "  note: " + c.note;
    out += "\n";
  }
  out += report.all_pass() ? "ALL CHECKS PASSED\n" : "CHECK FAILURES PRESENT\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"opalg: finite-dimensional operator-algebra verification toolkit"};
  app.set_version_flag("--version", std::string("opalg ") + opalg::kVersion);

  CliOptions opt;
  double tol_eq = 1e-10, tol_spec = 1e-8, tol_rank = 1e-10;
  int modulus = 0;

  app.add_option("--in", opt.in_path, "matrix input file (JSON)");
  app.add_option("--state", opt.state_path, "state input file (JSON)");
  app.add_option("--grid", opt.grid_path, "grid configuration file (JSON)");
  auto* seed_opt = app.add_option("--seed", opt.seed, "seed for all randomized checks");
  app.add_option("--tol-eq", tol_eq, "entrywise comparison tolerance");
  app.add_option("--tol-spec", tol_spec, "eigenvalue comparison tolerance");
  app.add_option("--tol-rank", tol_rank, "singular-value rank cutoff");
  app.add_option("--out", opt.out_path, "report output path (default: stdout)");
  app.add_option("--format", opt.format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--depth", opt.cfg.integral_depth, "operator-integral refinement depth");
  app.add_option("--cutoff", opt.cfg.integral_cutoff, "operator-integral phase-space cutoff");
  app.add_option("--modulus", modulus, "discrete Weyl modulus (odd)");
  app.add_option("--N", opt.cfg.grid_points, "grid points (power of two)");
  app.add_option("--L", opt.cfg.grid_half_width, "grid half-width");

  for (const std::string& cmd :
       {"spectra", "calculus", "gns", "weyl", "svn", "schrodinger", "verify-all"})
    app.add_subcommand(cmd, "run the " + cmd + " verification suite")->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  opt.command = app.get_subcommands().front()->get_name();
  // Seed priority: explicit flag, then OPALG_SEED, then the default.
  if (seed_opt->count() == 0) {
    if (const char* env = std::getenv("OPALG_SEED")) {
      try {
        opt.seed = std::stoull(env);
      } catch (...) {
        std::cerr << "error: OPALG_SEED is not an integer: " << env << "\n";
        return 2;
      }
    }
  }
  opt.cfg.seed = opt.seed;
  opt.cfg.ctx.eq_tol = tol_eq;
  opt.cfg.ctx.spec_tol = tol_spec;
  opt.cfg.ctx.rank_tol = tol_rank;
  if (modulus != 0) opt.cfg.moduli = {modulus};

  try {
    opt.cfg.ctx.validate();
    if (!opt.grid_path.empty()) {
      const opalg::GridRep grid = opalg::load_grid(opt.grid_path);
      opt.cfg.grid_points = grid.N;
      opt.cfg.grid_half_width = grid.L;
    }

    CheckReport report;
    if (opt.command == "spectra") {
      report = opalg::suite_spectra(opt.cfg);
    } else if (opt.command == "calculus") {
      report = opalg::suite_calculus(opt.cfg);
    } else if (opt.command == "gns") {
      report = opalg::suite_gns(opt.cfg);
    } else if (opt.command == "weyl") {
      report = opalg::suite_weyl(opt.cfg);
    } else if (opt.command == "svn") {
      report = opalg::suite_svn(opt.cfg);
    } else if (opt.command == "schrodinger") {
      report = opalg::suite_schrodinger(opt.cfg);
    } else {
      report = opalg::suite_all(opt.cfg);
    }
    if (!opt.in_path.empty()) report.merge(file_matrix_checks(opt.in_path, opt.cfg.ctx));
    if (!opt.state_path.empty()) report.merge(file_state_checks(opt.state_path, opt.cfg.ctx));
    report.sort_by_name();

    const std::string payload = opt.format == "json"
                                    ? report_to_json(opt, report).dump(2) + "\n"
                                    : report_to_text(report);
    if (opt.out_path.empty()) {
      std::cout << payload;
    } else {
      opalg::write_file_atomic(opt.out_path, payload);
    }
    return report.all_pass() ? 0 : 1;
  } catch (const opalg::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const opalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}
