// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#include "opalg/weyl.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "opalg/spectra.hpp"

namespace opalg {

namespace {

long long mod_n(long long e, long long n) {
  const long long r = e % n;
  return r < 0 ? r + n : r;
}

}  // namespace

DiscreteWeylSystem::DiscreteWeylSystem(int modulus, Convention conv) : n_(modulus), conv_(conv) {
  if (n_ < 3 || n_ % 2 == 0)
    throw PreconditionViolation("discrete Weyl systems require an odd modulus >= 3; even moduli "
                                "have no canonical square root of omega");
}

DiscreteWeylSystem DiscreteWeylSystem::conjugated(const AlgebraElement& conjugator) const {
  if (conjugator.dim() != n_) throw DimensionMismatch(n_, conjugator.dim());
  DiscreteWeylSystem out(n_, conv_);
  out.conjugator_ = conjugator.mat();
  return out;
}

Complex DiscreteWeylSystem::root(long long e) const {
  const double theta = 2.0 * 3.14159265358979323846 * static_cast<double>(mod_n(e, n_)) /
                       static_cast<double>(n_);
  return {std::cos(theta), std::sin(theta)};
}

int DiscreteWeylSystem::canonical_label(long long a) const {
  long long r = mod_n(a, n_);
  if (2 * r > n_) r -= n_;
  return static_cast<int>(r);
}

AlgebraElement DiscreteWeylSystem::weyl(long long a, long long b) const {
  const long long n = n_;
  const long long half = (n + 1) / 2;  // tau = omega^half
  Matrix w = Matrix::Zero(n, n);
  if (conv_ == Convention::clock_shift) {
    // W(a,b) = tau^{ab} U^a V^b with U = diag(omega^j), (V psi)_j = psi_{j+1}:
    // row j carries omega^{half*ab + a*j} at column (j + b) mod n.
    for (long long j = 0; j < n; ++j)
      w(j, mod_n(j + b, n)) = root(half * a * b + a * j);
  } else {
    // Clock and shift exchanged: U' = V, V' = U*; same relations, Fourier-
    // conjugate representation.
    for (long long j = 0; j < n; ++j) {
      const long long col = mod_n(j + a, n);
      w(j, col) = root(half * a * b - b * col);
    }
  }
  if (conjugator_) return AlgebraElement(*conjugator_ * w * conjugator_->adjoint());
  return AlgebraElement(std::move(w));
}

CheckReport check_weyl_relations(const DiscreteWeylSystem& sys, const ToleranceContext& ctx) {
  CheckReport report;
  report.suite = "weyl";
  const int n = sys.modulus();

  report.add("unit", "W(0) = I is the unit",
             sys.weyl(0, 0).max_abs_diff(AlgebraElement::unit(n)), 1e-13);

  double unitary_defect = 0.0, star_defect = 0.0, product_defect = 0.0;
  std::vector<AlgebraElement> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table.push_back(sys.weyl(a, b));
  const auto at = [&](long long a, long long b) -> const AlgebraElement& {
    return table[static_cast<std::size_t>(((a % n + n) % n) * n + ((b % n + n) % n))];
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const AlgebraElement& w = at(a, b);
      unitary_defect = std::max(
          unitary_defect, (w * w.adjoint()).max_abs_diff(AlgebraElement::unit(n)));
      star_defect = std::max(star_defect, w.adjoint().max_abs_diff(at(-a, -b)));
    }
  report.add("unitary", "the element W(v) is unitary", unitary_defect, 1e-13);
  report.add("star", "W(v)* = W(-v)", star_defect, 1e-13);

  // W(v) W(w) = tau^{-sigma(v,w)} W(v+w), exhaustively over label pairs.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const long long sigma = static_cast<long long>(a) * d - static_cast<long long>(c) * b;
          const AlgebraElement rhs = at(a + c, b + d) * sys.tau_power(-sigma);
          product_defect = std::max(product_defect, (at(a, b) * at(c, d)).max_abs_diff(rhs));
        }
  report.add("product", "W(v)W(w) = W(v+w) e^{-i sigma(v,w)/2}", product_defect, 1e-13);

  // Finite stand-in for the unit-circle spectrum: the clock's eigenvalues
  // are exactly the n-th roots of unity, densifying as n grows.
  std::vector<Complex> roots;
  for (int j = 0; j < n; ++j) roots.push_back(sys.tau_power(2 * j));
  const double spec_defect =
      multiset_distance(spectrum(sys.clock(), ctx).eigenvalues, roots);
  report.add("clock_spectrum", "spectrum of W(v): n-th roots of unity (unit circle as n -> inf)",
             spec_defect, ctx.spec_tol,
             "finite analog of the full-unit-circle statement");
  return report;
}

Intertwiner svn_intertwiner_discrete(const DiscreteWeylSystem& sys1,
                                     const DiscreteWeylSystem& sys2, std::uint64_t seed,
                                     const ToleranceContext& ctx) {
  if (sys1.modulus() != sys2.modulus())
    throw DimensionMismatch(sys1.modulus(), sys2.modulus());
  const int n = sys1.modulus();

  std::vector<AlgebraElement> w1, w2;
  w1.reserve(static_cast<std::size_t>(n) * n);
  w2.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      w1.push_back(sys1.weyl(a, b));
      w2.push_back(sys2.weyl(a, b));
    }

  for (int attempt = 0; attempt < 5; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b9ull);
    const Matrix x = random_element(rng, n).mat();
    Matrix t = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < w1.size(); ++i) t += w2[i].mat() * x * w1[i].mat().adjoint();
    t /= static_cast<double>(n) * n;

    if (t.norm() <= ctx.rank_tol * x.norm()) continue;  // probability-zero collapse; retry

    Eigen::BDCSVD<Matrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Intertwiner out;
    out.matrix = svd.matrixU() * svd.matrixV().adjoint();
    out.defect = 0.0;
    for (std::size_t i = 0; i < w1.size(); ++i) {
      const Matrix gap = out.matrix * w1[i].mat() - w2[i].mat() * out.matrix;
      out.defect = std::max(out.defect, op_norm(AlgebraElement(gap)));
    }
    return out;
  }
  throw ConvergenceFailure(
      "group-averaged intertwiner vanished for 5 consecutive seeds; representations may be "
      "inequivalent",
      0.0);
}

}  // namespace opalg
