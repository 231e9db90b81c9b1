// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#include "opalg/states.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "opalg/calculus.hpp"
#include "opalg/spectra.hpp"

namespace opalg {

DensityFunctional::DensityFunctional(Matrix density, const ToleranceContext& ctx)
    : d_(std::move(density)) {
  if (d_.rows() != d_.cols()) throw InvalidInput("density matrix must be square");
  if (!d_.allFinite()) throw InvalidInput("density matrix has non-finite entries");
  const double defect = (d_ - d_.adjoint()).norm();
  if (defect > ctx.eq_tol * std::max(1.0, d_.norm()))
    throw InvalidInput("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  d_ = (d_ + d_.adjoint()) / 2.0;
}

DensityFunctional DensityFunctional::vector_state(const Vector& y, const ToleranceContext& ctx) {
  const double nrm = y.norm();
  if (std::abs(nrm - 1.0) > ctx.eq_tol)
    throw PreconditionViolation("vector state requires a unit vector, norm " + std::to_string(nrm));
  return DensityFunctional(y * y.adjoint(), ctx);
}

DensityFunctional DensityFunctional::tracial(Eigen::Index n) {
  return DensityFunctional(Matrix::Identity(n, n) / static_cast<double>(n));
}

PositivityCheck is_positive_element(const AlgebraElement& a, const ToleranceContext& ctx) {
  PositivityCheck out;
  const double scale = std::max(1.0, a.norm_fro());
  out.self_adjoint = (a.mat() - a.mat().adjoint()).norm() <= ctx.eq_tol * scale;
  if (!out.self_adjoint) return out;

  Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat(), Eigen::EigenvaluesOnly);
  out.min_eigenvalue = es.eigenvalues().minCoeff();
  out.spectral = out.min_eigenvalue >= -ctx.spec_tol;

  // ||A - aI|| <= a with a = ||A|| pins the spectrum inside [0, 2a].
  const double anorm = op_norm(a);
  const AlgebraElement shifted = a - AlgebraElement::unit(a.dim()) * Complex(anorm, 0.0);
  out.norm_shift = op_norm(shifted) <= anorm + ctx.eq_tol * scale;
  return out;
}

CheckReport cone_checks(const AlgebraElement& a, const AlgebraElement& b,
                        const ToleranceContext& ctx) {
  if (!is_positive_element(a, ctx).positive() || !is_positive_element(b, ctx).positive())
    throw PreconditionViolation("cone checks require positive inputs");

  CheckReport report;
  report.suite = "cone";
  for (double s : {0.0, 0.5, 2.0, 10.0}) {
    const bool ok = is_positive_element(a * Complex(s, 0.0), ctx).positive();
    report.add_flag("scale_" + std::to_string(s), "a >= 0, A >= 0 => aA >= 0", ok);
  }
  report.add_flag("sum", "A, B >= 0 => A + B >= 0", is_positive_element(a + b, ctx).positive());

  const double comm_defect = commutator(a, b).norm_fro();
  if (comm_defect <= ctx.eq_tol * std::max(1.0, a.norm_fro() * b.norm_fro())) {
    report.add_flag("commuting_product", "AB = BA, A, B >= 0 => AB >= 0",
                    is_positive_element(a * b, ctx).positive());
  } else {
    report.add_flag("commuting_product", "AB = BA, A, B >= 0 => AB >= 0", true,
                    "commutativity hypothesis unmet; product positivity not claimed");
  }

  if (is_positive_element(-a, ctx).positive())
    report.add("plus_minus_zero", "A >= 0 and -A >= 0 => A = 0", op_norm(a), ctx.spec_tol);
  return report;
}

double functional_norm(const DensityFunctional& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.density(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

bool is_state(const DensityFunctional& rho, const ToleranceContext& ctx) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.density(), Eigen::EigenvaluesOnly);
  const bool psd = es.eigenvalues().minCoeff() >= -ctx.spec_tol;
  const bool unit_trace = std::abs(rho.density().trace().real() - 1.0) <= ctx.eq_tol &&
                          std::abs(rho.density().trace().imag()) <= ctx.eq_tol;
  return psd && unit_trace;
}

PurityVariance purity_and_variance(const DensityFunctional& rho, const AlgebraElement& a,
                                   const ToleranceContext& ctx) {
  if (!is_state(rho, ctx)) throw NotAState("purity/variance requires a state");
  const double sa_defect = (a.mat() - a.mat().adjoint()).norm();
  if (sa_defect > ctx.eq_tol * std::max(1.0, a.norm_fro())) throw NotSelfAdjoint(sa_defect);

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.density(), Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  int rank = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > ctx.rank_tol * std::max(1.0, top)) ++rank;

  PurityVariance out;
  out.is_pure = (rank == 1);
  const double mean = rho(a).real();
  const double second = rho(a * a).real();
  out.variance = second - mean * mean;
  return out;
}

AlgebraElement jordan_product(const AlgebraElement& a, const AlgebraElement& b) {
  const AlgebraElement s = a + b;
  return (s * s - a * a - b * b) * Complex(0.5, 0.0);
}

StateSupNorm state_sup_norm(const AlgebraElement& a, int samples, Rng& rng,
                            const ToleranceContext& ctx) {
  const double sa_defect = (a.mat() - a.mat().adjoint()).norm();
  if (sa_defect > ctx.eq_tol * std::max(1.0, a.norm_fro())) throw NotSelfAdjoint(sa_defect);

  StateSupNorm out;
  out.value = spectrum(a, ctx).radius;
  for (int k = 0; k < samples; ++k) {
    const DensityFunctional rho = random_density(rng, a.dim(), ctx);
    out.mc_lower = std::max(out.mc_lower, std::abs(rho(a)));
  }
  return out;
}

DensityFunctional random_density(Rng& rng, Eigen::Index n, const ToleranceContext& ctx) {
  const Matrix g = random_element(rng, n).mat();
  Matrix d = g * g.adjoint();
  d /= d.trace().real();
  return DensityFunctional(std::move(d), ctx);
}

}  // namespace opalg
