// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "opalg/element.hpp"
#include "opalg/tolerance.hpp"

namespace opalg {

// Orthonormal basis (Frobenius pairing) of a unital, star-closed,
// multiplication-closed matrix subspace.
struct SubalgebraBasis {
  Eigen::Index ambient_dim = 0;
  std::vector<AlgebraElement> basis;

  std::size_t size() const { return basis.size(); }

  // Frobenius coordinates of M against the basis.
  Vector coords(const AlgebraElement& m) const;

  // Reassemble an element from coordinates.
  AlgebraElement assemble(const Vector& c) const;

  // The full matrix algebra M_n with the (scaled) matrix-unit basis.
  static SubalgebraBasis full_matrix_algebra(Eigen::Index n);

  // The algebra of diagonal matrices in M_n.
  static SubalgebraBasis diagonal_algebra(Eigen::Index n);
};

// Smallest unital, star-closed, product-closed subspace containing the
// generators, built by alternating closure passes with modified Gram-Schmidt
// orthonormalization until the dimension stabilizes (bounded by n^2).
SubalgebraBasis generated_subalgebra(const std::vector<AlgebraElement>& generators,
                                     const ToleranceContext& ctx = {});

// Relative Frobenius residual of M after projection onto span(S);
// 0 for M = 0.
double projection_residual(const SubalgebraBasis& s, const AlgebraElement& m);

// Membership test: projection residual <= rank_tol * ||M||_F.
bool contains(const SubalgebraBasis& s, const AlgebraElement& m, const ToleranceContext& ctx = {});

// Orthonormal basis of {X : XB = BX for all B in the list}, via the null
// space of the stacked maps X -> XB - BX.
SubalgebraBasis commutant_of(const std::vector<AlgebraElement>& ops, Eigen::Index ambient_dim,
                             const ToleranceContext& ctx = {});

inline SubalgebraBasis commutant(const SubalgebraBasis& s, const ToleranceContext& ctx = {}) {
  return commutant_of(s.basis, s.ambient_dim, ctx);
}

}  // namespace opalg
