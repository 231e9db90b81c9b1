// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#include "opalg/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace opalg {

double op_norm(const AlgebraElement& a) {
  if (a.dim() == 0) return 0.0;
  // Largest eigenvalue of A*A; Hermitian solvers are exact enough that the
  // C*-identity holds to machine precision.
  const Matrix gram = a.mat().adjoint() * a.mat();
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().maxCoeff();
  return top > 0 ? std::sqrt(top) : 0.0;
}

SpectrumResult spectrum(const AlgebraElement& a, const ToleranceContext& ctx) {
  (void)ctx;
  SpectrumResult out;
  const Eigen::Index n = a.dim();
  if (n == 0) return out;
  Eigen::ComplexEigenSolver<Matrix> es(a.mat(), /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("eigensolver failed to converge (condition estimate " +
                                 std::to_string(condition_estimate(a)) + ")",
                             std::numeric_limits<double>::quiet_NaN());
  out.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  out.radius = 0.0;
  for (const Complex& z : out.eigenvalues) out.radius = std::max(out.radius, std::abs(z));
  return out;
}

double condition_estimate(const AlgebraElement& a) {
  Eigen::JacobiSVD<Matrix> svd(a.mat());
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / sv(sv.size() - 1);
}

AlgebraElement inverse(const AlgebraElement& a, const ToleranceContext& ctx) {
  const Eigen::Index n = a.dim();
  Eigen::JacobiSVD<Matrix> svd(a.mat(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = ctx.rank_tol * (sv.size() ? sv(0) : 0.0);
  if (sv.size() == 0 || sv(n - 1) <= cutoff) {
    throw NotInvertible(sv.size() ? sv(n - 1) : 0.0, cutoff);
  }
  Vector inv_sv(n);
  for (Eigen::Index i = 0; i < n; ++i) inv_sv(i) = 1.0 / sv(i);
  return AlgebraElement(svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint());
}

AlgebraElement neumann_inverse(const AlgebraElement& a, int max_terms,
                               const ToleranceContext& ctx) {
  const double norm_a = op_norm(a);
  if (norm_a >= 1.0)
    throw PreconditionViolation("Neumann series requires ||A|| < 1, got " + std::to_string(norm_a));
  const Eigen::Index n = a.dim();
  AlgebraElement sum = AlgebraElement::unit(n);
  AlgebraElement term = AlgebraElement::unit(n);
  for (int k = 0; k < max_terms; ++k) {
    term = term * a;
    const double inc = term.norm_fro();
    sum = sum + term;
    if (inc <= ctx.eq_tol) return sum;
  }
  const AlgebraElement residual = sum * (AlgebraElement::unit(n) - a) - AlgebraElement::unit(n);
  throw ConvergenceFailure("Neumann series did not converge in " + std::to_string(max_terms) +
                               " terms; residual " + std::to_string(residual.norm_fro()),
                           residual.norm_fro());
}

std::vector<double> spectral_radius_sequence(const AlgebraElement& a, int squarings) {
  if (squarings < 1) throw PreconditionViolation("squarings must be >= 1");
  std::vector<double> seq;
  seq.reserve(static_cast<std::size_t>(squarings));
  double nrm = op_norm(a);
  if (nrm == 0.0) {
    seq.assign(static_cast<std::size_t>(squarings), 0.0);
    return seq;
  }
  // Track B = A^(2^k) / exp(log_acc); renormalizing keeps entries finite for
  // any spectral radius while log_acc carries the true magnitude.
  Matrix b = a.mat() / nrm;
  double log_acc = std::log(nrm);  // log ||A^(2^k)|| estimate at k = 0
  double factor = 1.0;
  for (int k = 1; k <= squarings; ++k) {
    Matrix sq = b * b;
    const AlgebraElement sq_el(sq);
    const double m = op_norm(sq_el);
    factor *= 0.5;
    if (m == 0.0) {
      // Exactly nilpotent at this power: the remaining sequence is 0.
      for (; k <= squarings; ++k) seq.push_back(0.0);
      return seq;
    }
    log_acc = 2.0 * log_acc + std::log(m);
    b = sq / m;
    seq.push_back(std::exp(log_acc * factor));
  }
  return seq;
}

double spectral_radius_limit(const AlgebraElement& a, int squarings) {
  return spectral_radius_sequence(a, squarings).back();
}

double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const std::size_t n = a.size();
  std::vector<bool> used_a(n, false), used_b(n, false);
  double worst = 0.0;
  // Repeatedly match the globally closest unmatched pair.
  for (std::size_t round = 0; round < n; ++round) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used_a[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (used_b[j]) continue;
        const double d = std::abs(a[i] - b[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    used_a[bi] = used_b[bj] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace opalg
