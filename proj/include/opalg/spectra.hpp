// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "opalg/element.hpp"
#include "opalg/tolerance.hpp"

namespace opalg {

// Eigenvalue multiset of an element together with the spectral radius.
struct SpectrumResult {
  std::vector<Complex> eigenvalues;
  double radius = 0.0;
};

// Largest singular value; the operator norm realizing the C*-identity.
double op_norm(const AlgebraElement& a);

// All eigenvalues with multiplicity. Throws ConvergenceFailure if the
// eigensolver does not converge (carrying a condition estimate).
SpectrumResult spectrum(const AlgebraElement& a, const ToleranceContext& ctx = {});

// Two-sided inverse via SVD. Throws NotInvertible when the smallest singular
// value falls below rank_tol times the largest.
AlgebraElement inverse(const AlgebraElement& a, const ToleranceContext& ctx = {});

// Condition number estimate sigma_max / sigma_min.
double condition_estimate(const AlgebraElement& a);

// Geometric series sum_k A^k for ||A|| < 1, the inverse of I - A.
// Throws PreconditionViolation when ||A|| >= 1 and ConvergenceFailure
// (carrying the residual) when max_terms is exhausted.
AlgebraElement neumann_inverse(const AlgebraElement& a, int max_terms,
                               const ToleranceContext& ctx = {});

// ||A^(2^k)||^(1/2^k) for k = 1..squarings, by repeated squaring with
// per-step renormalization (log-accumulated norms). Monotone decreasing,
// with limit equal to the spectral radius.
std::vector<double> spectral_radius_sequence(const AlgebraElement& a, int squarings);

// Final term of the sequence above.
double spectral_radius_limit(const AlgebraElement& a, int squarings);

// Greedy minimal-distance matching of two eigenvalue multisets. Returns the
// largest matched distance; infinity when the sizes differ.
double multiset_distance(std::vector<Complex> a, std::vector<Complex> b);

inline bool multisets_match(const std::vector<Complex>& a, const std::vector<Complex>& b,
                            double tol) {
  return multiset_distance(a, b) <= tol;
}

}  // namespace opalg
