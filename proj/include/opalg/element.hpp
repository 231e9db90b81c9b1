// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "opalg/errors.hpp"
#include "opalg/rng.hpp"

namespace opalg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Element of a matrix *-algebra: a dense square complex matrix carrying the
// algebra arithmetic. Construction validates squareness and finiteness;
// arithmetic on equal dimensions stays closed.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  explicit AlgebraElement(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw InvalidInput("algebra element must be square");
    if (!m_.allFinite()) throw InvalidInput("algebra element has non-finite entries");
  }

  static AlgebraElement unit(Eigen::Index n) { return AlgebraElement(Matrix::Identity(n, n)); }
  static AlgebraElement zero(Eigen::Index n) { return AlgebraElement(Matrix::Zero(n, n)); }

  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& mat() const { return m_; }

  AlgebraElement adjoint() const { return AlgebraElement(m_.adjoint()); }
  Complex trace() const { return m_.trace(); }
  double norm_fro() const { return m_.norm(); }

  AlgebraElement operator+(const AlgebraElement& o) const {
    check_dim(o);
    return AlgebraElement(m_ + o.m_);
  }
  AlgebraElement operator-(const AlgebraElement& o) const {
    check_dim(o);
    return AlgebraElement(m_ - o.m_);
  }
  AlgebraElement operator*(const AlgebraElement& o) const {
    check_dim(o);
    return AlgebraElement(m_ * o.m_);
  }
  AlgebraElement operator*(Complex s) const { return AlgebraElement(m_ * s); }
  AlgebraElement operator-() const { return AlgebraElement(-m_); }
  friend AlgebraElement operator*(Complex s, const AlgebraElement& a) { return a * s; }

  Vector apply(const Vector& v) const {
    if (v.size() != dim()) throw DimensionMismatch(v.size(), dim());
    return m_ * v;
  }

  // Frobenius pairing trace(A* B); the inner product used for subalgebra work.
  Complex dot(const AlgebraElement& o) const {
    check_dim(o);
    return (m_.adjoint() * o.m_).trace();
  }

  double max_abs_diff(const AlgebraElement& o) const {
    check_dim(o);
    return (m_ - o.m_).cwiseAbs().maxCoeff();
  }

  bool approx_equal(const AlgebraElement& o, double tol) const { return max_abs_diff(o) <= tol; }

 private:
  void check_dim(const AlgebraElement& o) const {
    if (o.dim() != dim()) throw DimensionMismatch(dim(), o.dim());
  }

  Matrix m_;
};

inline AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return a * b - b * a;
}

// --- seeded random elements used across the verification suites ---

inline AlgebraElement random_element(Rng& rng, Eigen::Index n, double scale = 1.0) {
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rng.cgaussian() * scale;
  return AlgebraElement(m);
}

inline AlgebraElement random_hermitian(Rng& rng, Eigen::Index n, double scale = 1.0) {
  const Matrix m = random_element(rng, n, scale).mat();
  return AlgebraElement(((m + m.adjoint()) / 2.0).eval());
}

inline AlgebraElement random_unitary(Rng& rng, Eigen::Index n) {
  const Matrix m = random_element(rng, n).mat();
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  // Fix the phase convention so the factor is unique.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return AlgebraElement(q);
}

}  // namespace opalg
