// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "opalg/element.hpp"
#include "opalg/gns.hpp"
#include "opalg/report.hpp"
#include "opalg/tolerance.hpp"

namespace opalg {

// Phase-space label v = (alpha, beta) for Weyl elements (d = 1).
struct PhasePoint {
  double alpha = 0.0;
  double beta = 0.0;

  double norm_sq() const { return alpha * alpha + beta * beta; }
};

// sigma(v, w) = alpha*delta - gamma*beta; antisymmetric, bilinear,
// sigma(v,v) = 0.
inline double symplectic_form(const PhasePoint& v, const PhasePoint& w) {
  return v.alpha * w.beta - w.alpha * v.beta;
}

// Finite Weyl system on C^n, n odd: clock U = diag(omega^j), shift V with
// V e_j = e_{j-1}, so that UV = conj(omega) VU, and
//   W(a,b) = tau^{ab} U^a V^b,  tau = omega^{(n+1)/2}, tau^2 = omega.
// All entries are n-th roots of unity computed by integer exponent
// arithmetic; the Weyl relations hold exactly:
//   W(v)* = W(-v),  W(v) W(w) = tau^{-sigma(v,w)} W(v+w).
class DiscreteWeylSystem {
 public:
  enum class Convention { clock_shift, fourier_dual };

  explicit DiscreteWeylSystem(int modulus, Convention conv = Convention::clock_shift);

  // Same system conjugated by a unitary: W'(v) = C W(v) C*.
  DiscreteWeylSystem conjugated(const AlgebraElement& conjugator) const;

  int modulus() const { return n_; }
  Complex omega() const { return root(1); }
  Complex tau() const { return root((n_ + 1) / 2); }

  AlgebraElement clock() const { return weyl(1, 0); }
  AlgebraElement shift() const { return weyl(0, 1); }

  // The Weyl element W(a, b); labels are taken mod n.
  AlgebraElement weyl(long long a, long long b) const;

  // Phase tau^e as an exact root of unity.
  Complex tau_power(long long e) const { return root(((n_ + 1) / 2) * e); }

  // Canonical residue in (-n/2, n/2].
  int canonical_label(long long a) const;

 private:
  Complex root(long long e) const;  // exp(2 pi i e / n), exponent mod n

  int n_;
  Convention conv_;
  std::optional<Matrix> conjugator_;
};

// Exhaustive verification of the discrete Weyl relations over all label
// pairs: unit, unitarity, the star law, the product law, and the clock
// spectrum (n-th roots of unity, the finite stand-in for the full unit
// circle as n grows).
CheckReport check_weyl_relations(const DiscreteWeylSystem& sys, const ToleranceContext& ctx = {});

// Group-averaged intertwiner between two Weyl systems of equal modulus:
// T = (1/n^2) sum_v W2(v) X W1(v)* for seeded random X, polar-corrected to
// a unitary U with U W1(v) = W2(v) U. Retries with fresh X (up to 5 seeds)
// when T is numerically zero.
Intertwiner svn_intertwiner_discrete(const DiscreteWeylSystem& sys1,
                                     const DiscreteWeylSystem& sys2, std::uint64_t seed,
                                     const ToleranceContext& ctx = {});

}  // namespace opalg
