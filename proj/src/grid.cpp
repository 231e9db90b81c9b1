// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#include "opalg/grid.hpp"

#include <cmath>
#include <vector>

namespace opalg {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Circulant kernel g(r) = (1/N) sum_m w_m e^{2 pi i r m / N}; the matrix of
// F^{-1} diag(w) F has entries C_{jl} = g((j - l) mod N).
Vector circulant_kernel(const GridRep& grid, const Vector& w) {
  const int n = grid.N;
  std::vector<Complex> unit_roots(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    const double t = 2.0 * kPi * r / n;
    unit_roots[static_cast<std::size_t>(r)] = {std::cos(t), std::sin(t)};
  }
  Vector g(n);
  for (int r = 0; r < n; ++r) {
    Complex acc = 0.0;
    for (int m = 0; m < n; ++m)
      acc += w(m) * unit_roots[static_cast<std::size_t>((static_cast<long long>(r) * m) % n)];
    g(r) = acc / static_cast<double>(n);
  }
  return g;
}

Matrix circulant_matrix(const GridRep& grid, const Vector& g) {
  const int n = grid.N;
  Matrix c(n, n);
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) c(j, l) = g(((j - l) % n + n) % n);
  return c;
}

Vector circulant_apply(const Vector& g, const Vector& psi) {
  const int n = static_cast<int>(g.size());
  Vector out(n);
  for (int j = 0; j < n; ++j) {
    Complex acc = 0.0;
    for (int l = 0; l < n; ++l) acc += g(((j - l) % n + n) % n) * psi(l);
    out(j) = acc;
  }
  return out;
}

Vector translation_weights(const GridRep& grid, double beta) {
  Vector w(grid.N);
  for (int m = 0; m < grid.N; ++m) w(m) = std::polar(1.0, beta * grid.k(m));
  return w;
}

}  // namespace

GridRep::GridRep(int n_points, double half_width) : N(n_points), L(half_width) {
  if (N < 2 || (N & (N - 1)) != 0)
    throw InvalidInput("grid size must be a power of two >= 2, got " + std::to_string(N));
  if (!(L > 0.0)) throw InvalidInput("grid half-width must be positive");
  x.resize(N);
  k.resize(N);
  const double step = dx();
  for (int j = 0; j < N; ++j) x(j) = -L + j * step;
  for (int m = 0; m < N; ++m) {
    const int folded = (m < N / 2) ? m : m - N;
    k(m) = kPi * folded / L;
  }
}

AlgebraElement phase_op(const GridRep& grid, double alpha) {
  Vector d(grid.N);
  for (int j = 0; j < grid.N; ++j) d(j) = std::polar(1.0, alpha * grid.x(j));
  return AlgebraElement(Matrix(d.asDiagonal()));
}

AlgebraElement translate_op(const GridRep& grid, double beta) {
  const Vector g = circulant_kernel(grid, translation_weights(grid, beta));
  return AlgebraElement(circulant_matrix(grid, g));
}

std::pair<AlgebraElement, AlgebraElement> position_momentum(const GridRep& grid) {
  AlgebraElement q(Matrix(grid.x.cast<Complex>().asDiagonal()));
  const Vector g = circulant_kernel(grid, grid.k.cast<Complex>());
  AlgebraElement p(circulant_matrix(grid, g));
  return {std::move(q), std::move(p)};
}

AlgebraElement weyl_op(const GridRep& grid, const PhasePoint& v) {
  const Complex half_phase = std::polar(1.0, v.alpha * v.beta / 2.0);
  const Vector g = circulant_kernel(grid, translation_weights(grid, v.beta));
  Matrix w(grid.N, grid.N);
  for (int j = 0; j < grid.N; ++j) {
    const Complex row = half_phase * std::polar(1.0, v.alpha * grid.x(j));
    for (int l = 0; l < grid.N; ++l) w(j, l) = row * g(((j - l) % grid.N + grid.N) % grid.N);
  }
  return AlgebraElement(std::move(w));
}

Vector weyl_apply(const GridRep& grid, const PhasePoint& v, const Vector& psi) {
  const Vector g = circulant_kernel(grid, translation_weights(grid, v.beta));
  Vector out = circulant_apply(g, psi);
  const Complex half_phase = std::polar(1.0, v.alpha * v.beta / 2.0);
  for (int j = 0; j < grid.N; ++j) out(j) *= half_phase * std::polar(1.0, v.alpha * grid.x(j));
  return out;
}

double ccr_defect(const GridRep& grid, const Vector& psi) {
  const Vector g = circulant_kernel(grid, grid.k.cast<Complex>());
  const Vector p_psi = circulant_apply(g, psi);
  const Vector q_psi = grid.x.cast<Complex>().cwiseProduct(psi);
  const Vector qp = grid.x.cast<Complex>().cwiseProduct(p_psi);
  const Vector pq = circulant_apply(g, q_psi);
  const Vector defect = qp - pq - Complex(0.0, 1.0) * psi;
  return grid.norm(defect);
}

Vector hermite_state(const GridRep& grid, int n) {
  if (n < 0) throw PreconditionViolation("Hermite index must be >= 0");
  const int npts = grid.N;
  Vector prev(npts), curr(npts);
  const double norm0 = std::pow(kPi, -0.25);
  for (int j = 0; j < npts; ++j)
    curr(j) = norm0 * std::exp(-grid.x(j) * grid.x(j) / 2.0);
  for (int m = 1; m <= n; ++m) {
    Vector next(npts);
    const double a = std::sqrt(2.0 / m);
    const double b = (m > 1) ? std::sqrt(static_cast<double>(m - 1) / m) : 0.0;
    for (int j = 0; j < npts; ++j)
      next(j) = a * grid.x(j) * curr(j) - (m > 1 ? b * prev(j) : Complex(0.0));
    prev = std::move(curr);
    curr = std::move(next);
  }
  return grid.normalized(std::move(curr));
}

AlgebraElement riemann_operator_integral(const GridRep& grid, const RiemannIntegralSpec& spec) {
  if (spec.depth < 0) throw PreconditionViolation("partition depth must be >= 0");
  if (!spec.kernel) throw PreconditionViolation("integral kernel missing");
  const int cells = 1 << spec.depth;
  const double sa = (spec.alpha_max - spec.alpha_min) / cells;
  const double sb = (spec.beta_max - spec.beta_min) / cells;
  if (!(sa > 0.0) || !(sb > 0.0)) throw PreconditionViolation("integration box is degenerate");
  const double area = sa * sb;

  // Integrability guard: the largest single-cell contribution must shrink
  // under refinement (midpoint sums of |kernel| diverge cellwise for
  // non-integrable singularities).
  if (spec.depth >= 2) {
    double prev_max = 0.0;
    for (int d : {spec.depth - 1, spec.depth}) {
      const int c = 1 << d;
      const double ca = (spec.alpha_max - spec.alpha_min) / c;
      const double cb = (spec.beta_max - spec.beta_min) / c;
      double max_contrib = 0.0;
      for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) {
          const PhasePoint v{spec.alpha_min + (i + 0.5) * ca, spec.beta_min + (j + 0.5) * cb};
          const Complex kv = spec.kernel(v);
          if (!std::isfinite(kv.real()) || !std::isfinite(kv.imag()))
            throw PreconditionViolation("kernel is not finite on the integration box");
          max_contrib = std::max(max_contrib, std::abs(kv) * ca * cb);
        }
      if (d == spec.depth && prev_max > 0.0 && max_contrib > 0.9 * prev_max &&
          max_contrib > 1e-12)
        throw PreconditionViolation("kernel appears non-integrable on the box: cell "
                                    "contributions do not shrink under refinement");
      prev_max = max_contrib;
    }
  }

  const int n = grid.N;
  Matrix acc = Matrix::Zero(n, n);
  // W(v) = phase(v) U(alpha) V(beta) factorizes the sum: for each beta
  // column, fold the alpha sum into a diagonal profile first.
  for (int jb = 0; jb < cells; ++jb) {
    const double beta = spec.beta_min + (jb + 0.5) * sb;
    const Vector g = circulant_kernel(grid, translation_weights(grid, beta));
    Vector profile = Vector::Zero(n);
    for (int ia = 0; ia < cells; ++ia) {
      const double alpha = spec.alpha_min + (ia + 0.5) * sa;
      const Complex weight =
          spec.kernel({alpha, beta}) * area * std::polar(1.0, alpha * beta / 2.0);
      if (weight == Complex(0.0)) continue;
      for (int r = 0; r < n; ++r) profile(r) += weight * std::polar(1.0, alpha * grid.x(r));
    }
    for (int r = 0; r < n; ++r) {
      if (profile(r) == Complex(0.0)) continue;
      for (int c = 0; c < n; ++c) acc(r, c) += profile(r) * g(((r - c) % n + n) % n);
    }
  }
  return AlgebraElement(std::move(acc));
}

FockProjection fock_projection(const GridRep& grid, double cutoff, int depth,
                               const ToleranceContext& ctx) {
  if (cutoff < 8.0)
    throw PreconditionViolation("cutoff must be >= 8 so the Gaussian tail is negligible");
  if (grid.L < 8.0 || grid.N < 256)
    throw PreconditionViolation("grid too coarse to resolve the Gaussian (need L >= 8, N >= 256)");

  RiemannIntegralSpec spec;
  spec.alpha_min = -cutoff;
  spec.alpha_max = cutoff;
  spec.beta_min = -cutoff;
  spec.beta_max = cutoff;
  spec.depth = depth;
  spec.kernel = [](const PhasePoint& v) {
    return Complex(std::exp(-v.norm_sq() / 4.0) / (2.0 * kPi), 0.0);
  };

  FockProjection out;
  out.projection = riemann_operator_integral(grid, spec);

  // Image of a generic seeded vector spans the (rank-one) range.
  Rng rng(0x0f0ccaf1u);
  Vector probe(grid.N);
  for (int j = 0; j < grid.N; ++j) probe(j) = rng.cgaussian();
  probe = grid.normalized(std::move(probe));
  Vector image = out.projection.mat() * probe;
  if (grid.norm(image) <= ctx.rank_tol)
    throw ConvergenceFailure("Gaussian-averaged integral is numerically zero; integration "
                             "misconfigured",
                             grid.norm(image));
  out.omega = grid.normalized(std::move(image));
  // Fix the (physically irrelevant) global phase: largest entry real positive.
  Eigen::Index imax = 0;
  out.omega.cwiseAbs().maxCoeff(&imax);
  const Complex top = out.omega(imax);
  if (std::abs(top) > 0) out.omega *= std::conj(top) / std::abs(top);
  return out;
}

Complex fock_expectation(const GridRep& grid, const PhasePoint& v) {
  const Vector omega = gaussian_ground_state(grid);
  return grid.inner(omega, weyl_apply(grid, v, omega));
}

Uncertainty uncertainty_check(const GridRep& grid, const Vector& psi,
                              const ToleranceContext& ctx) {
  if (std::abs(grid.norm(psi) - 1.0) > 1e-8)
    throw PreconditionViolation("state vector must be unit-normalized");
  // Reject states with visible boundary mass: translation wraps around and
  // the dispersion estimates lose meaning.
  const int margin = std::max(1, grid.N / 16);
  double boundary_mass = 0.0;
  for (int j = 0; j < margin; ++j)
    boundary_mass += std::norm(psi(j)) + std::norm(psi(grid.N - 1 - j));
  boundary_mass *= grid.dx();
  if (boundary_mass > ctx.eq_tol)
    throw PreconditionViolation("state carries boundary mass " + std::to_string(boundary_mass) +
                                "; dispersion estimates need a localized state");

  const Vector g = circulant_kernel(grid, grid.k.cast<Complex>());
  const Vector q_psi = grid.x.cast<Complex>().cwiseProduct(psi);
  const Vector p_psi = circulant_apply(g, psi);
  const double mean_q = grid.inner(psi, q_psi).real();
  const double mean_p = grid.inner(psi, p_psi).real();
  const double sq_q = grid.inner(q_psi, q_psi).real();
  const double sq_p = grid.inner(p_psi, p_psi).real();
  Uncertainty out;
  out.dq = std::sqrt(std::max(0.0, sq_q - mean_q * mean_q));
  out.dp = std::sqrt(std::max(0.0, sq_p - mean_p * mean_p));
  return out;
}

CheckReport born_rule_check(const GridRep& grid, const Vector& psi,
                            const std::function<double(double)>& f) {
  CheckReport report;
  report.suite = "born_rule";
  if (std::abs(grid.norm(psi) - 1.0) > 1e-8)
    throw PreconditionViolation("state vector must be unit-normalized");

  Vector fvals(grid.N);
  for (int j = 0; j < grid.N; ++j) fvals(j) = Complex(f(grid.x(j)), 0.0);
  const Complex op_path = grid.inner(psi, fvals.cwiseProduct(psi));

  double weight_sum = 0.0, integral = 0.0, min_weight = 0.0;
  for (int j = 0; j < grid.N; ++j) {
    const double w = std::norm(psi(j)) * grid.dx();
    weight_sum += w;
    min_weight = std::min(min_weight, w);
    integral += w * fvals(j).real();
  }

  report.add("operator_vs_measure", "omega_psi(F(q)) = int |psi|^2 F dx",
             std::abs(op_path - Complex(integral, 0.0)),
             1e-12 * std::max(1.0, std::abs(integral)));
  report.add("weights_nonnegative", "|psi(x)|^2 is a probability density", -min_weight, 0.0);
  report.add("weights_normalized", "sum |psi_j|^2 dx = 1", std::abs(weight_sum - 1.0), 1e-10);
  return report;
}

}  // namespace opalg
