// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#include "opalg/subalgebra.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace opalg {

Vector SubalgebraBasis::coords(const AlgebraElement& m) const {
  Vector c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    c(static_cast<Eigen::Index>(i)) = basis[i].dot(m);
  return c;
}

AlgebraElement SubalgebraBasis::assemble(const Vector& c) const {
  Matrix acc = Matrix::Zero(ambient_dim, ambient_dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    acc += c(static_cast<Eigen::Index>(i)) * basis[i].mat();
  return AlgebraElement(acc);
}

SubalgebraBasis SubalgebraBasis::full_matrix_algebra(Eigen::Index n) {
  SubalgebraBasis s;
  s.ambient_dim = n;
  s.basis.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Matrix e = Matrix::Zero(n, n);
      e(i, j) = 1.0;
      s.basis.emplace_back(e);
    }
  return s;
}

SubalgebraBasis SubalgebraBasis::diagonal_algebra(Eigen::Index n) {
  SubalgebraBasis s;
  s.ambient_dim = n;
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix e = Matrix::Zero(n, n);
    e(i, i) = 1.0;
    s.basis.emplace_back(e);
  }
  return s;
}

namespace {

// Modified Gram-Schmidt insert with one re-orthogonalization pass; returns
// true when the candidate added a new direction.
bool mgs_insert(std::vector<AlgebraElement>& basis, const AlgebraElement& cand, double drop_tol) {
  Matrix r = cand.mat();
  const double scale = std::max(1.0, r.norm());
  for (int pass = 0; pass < 2; ++pass) {
    for (const AlgebraElement& b : basis) {
      const Complex c = (b.mat().adjoint() * r).trace();
      r -= c * b.mat();
    }
  }
  const double nrm = r.norm();
  if (nrm <= drop_tol * scale) return false;
  basis.emplace_back(Matrix(r / nrm));
  return true;
}

}  // namespace

SubalgebraBasis generated_subalgebra(const std::vector<AlgebraElement>& generators,
                                     const ToleranceContext& ctx) {
  if (generators.empty()) throw PreconditionViolation("generator list must be non-empty");
  const Eigen::Index n = generators.front().dim();
  for (const auto& g : generators)
    if (g.dim() != n) throw DimensionMismatch(n, g.dim());

  // Closure residuals live well above rank_tol for honest new directions;
  // the sqrt splits the difference between the two regimes.
  const double drop_tol = std::sqrt(ctx.rank_tol);

  SubalgebraBasis s;
  s.ambient_dim = n;
  mgs_insert(s.basis, AlgebraElement::unit(n), drop_tol);
  for (const auto& g : generators) mgs_insert(s.basis, g, drop_tol);

  bool grew = true;
  while (grew && s.basis.size() < static_cast<std::size_t>(n * n)) {
    grew = false;
    const std::vector<AlgebraElement> snapshot = s.basis;
    for (const auto& b : snapshot)
      if (mgs_insert(s.basis, b.adjoint(), drop_tol)) grew = true;
    for (const auto& b1 : snapshot)
      for (const auto& b2 : snapshot)
        if (mgs_insert(s.basis, b1 * b2, drop_tol)) grew = true;
  }
  return s;
}

double projection_residual(const SubalgebraBasis& s, const AlgebraElement& m) {
  const double scale = m.norm_fro();
  if (scale == 0.0) return 0.0;
  Matrix r = m.mat();
  for (const AlgebraElement& b : s.basis) {
    const Complex c = (b.mat().adjoint() * r).trace();
    r -= c * b.mat();
  }
  return r.norm() / scale;
}

bool contains(const SubalgebraBasis& s, const AlgebraElement& m, const ToleranceContext& ctx) {
  if (m.dim() != s.ambient_dim) throw DimensionMismatch(s.ambient_dim, m.dim());
  return projection_residual(s, m) <= ctx.rank_tol;
}

SubalgebraBasis commutant_of(const std::vector<AlgebraElement>& ops, Eigen::Index ambient_dim,
                             const ToleranceContext& ctx) {
  const Eigen::Index n = ambient_dim;
  const Eigen::Index nn = n * n;
  if (ops.empty()) return SubalgebraBasis::full_matrix_algebra(n);
  // Stack the linear maps X -> XB - BX over all B; with column-major vec,
  // vec(XB) = (B^T (x) I) vec(X) and vec(BX) = (I (x) B) vec(X).
  Matrix stacked(static_cast<Eigen::Index>(ops.size()) * nn, nn);
  const Matrix id = Matrix::Identity(n, n);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const Matrix& b = ops[k].mat();
    Matrix block(nn, nn);
    for (Eigen::Index col = 0; col < n; ++col)
      for (Eigen::Index row = 0; row < n; ++row) {
        // Kron(B^T, I) - Kron(I, B), assembled blockwise.
        block.block(row * n, col * n, n, n) =
            b.transpose()(row, col) * id - (row == col ? b : Matrix::Zero(n, n));
      }
    stacked.middleRows(static_cast<Eigen::Index>(k) * nn, nn) = block;
  }
  Eigen::BDCSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = ctx.rank_tol * std::max(sv.size() ? sv(0) : 0.0, 1.0);
  SubalgebraBasis out;
  out.ambient_dim = n;
  for (Eigen::Index i = 0; i < nn; ++i) {
    if (i < sv.size() && sv(i) > cutoff) continue;
    Matrix x(n, n);
    for (Eigen::Index col = 0; col < n; ++col) x.col(col) = svd.matrixV().col(i).segment(col * n, n);
    out.basis.emplace_back(x);
  }
  return out;
}

}  // namespace opalg
