// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "opalg/element.hpp"
#include "opalg/report.hpp"
#include "opalg/states.hpp"
#include "opalg/subalgebra.hpp"
#include "opalg/tolerance.hpp"

namespace opalg {

// Cyclic representation built from a state: the quotient of the algebra by
// the left kernel, the left-multiplication action, and the coset of I as
// the cyclic vector.
struct GnsResult {
  Eigen::Index hilbert_dim = 0;
  std::vector<AlgebraElement> rep_basis;       // rep(B_i) per algebra basis element
  Vector cyclic;                               // unit cyclic vector
  std::vector<AlgebraElement> quotient_basis;  // coset representatives, orthonormal in <.,.>_rho
};

// Unitary map between two representation spaces with its conjugation defect.
struct Intertwiner {
  Matrix matrix;
  double defect = 0.0;
};

// Null directions of the state's inner product: combinations K with
// rho(K* K) = 0, from the null space of the Gram matrix rho(B_i* B_j).
std::vector<AlgebraElement> left_kernel(const std::vector<AlgebraElement>& algebra_basis,
                                        const DensityFunctional& rho,
                                        const ToleranceContext& ctx = {});

GnsResult gns_construct(const SubalgebraBasis& algebra, const DensityFunctional& rho,
                        const ToleranceContext& ctx = {});

// rep(A) for any A in span(algebra), by expanding in the basis.
AlgebraElement gns_rep(const GnsResult& result, const SubalgebraBasis& algebra,
                       const AlgebraElement& a);

// The defining representation of a matrix algebra on C^n with a chosen
// cyclic vector, packaged as a GnsResult for equivalence tests.
GnsResult defining_representation(const SubalgebraBasis& algebra, const Vector& cyclic_vec);

// Checks: state recovery, homomorphism, star preservation, cyclicity,
// contractivity (and isometry when the state is faithful).
CheckReport verify_gns(const GnsResult& result, const SubalgebraBasis& algebra,
                       const DensityFunctional& rho, const ToleranceContext& ctx = {});

// Unitary U with U rep1(A) = rep2(A) U and U x1 = x2, assembled by least
// squares on the cyclic orbits and polar-corrected to unitarity.
Intertwiner equivalence_intertwiner(const GnsResult& rep1, const GnsResult& rep2,
                                    const SubalgebraBasis& algebra,
                                    const ToleranceContext& ctx = {});

// Trivial commutant criterion.
bool is_irreducible(const GnsResult& result, const ToleranceContext& ctx = {});

// The state A -> <y, rep(A) y> pulled back to a density functional on the
// original algebra.
DensityFunctional vector_state(const GnsResult& result, const Vector& y,
                               const SubalgebraBasis& algebra, const ToleranceContext& ctx = {});

}  // namespace opalg
