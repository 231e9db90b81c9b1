// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "opalg/element.hpp"
#include "opalg/report.hpp"
#include "opalg/rng.hpp"
#include "opalg/tolerance.hpp"

namespace opalg {

// Linear functional rho(A) = trace(D A) defined by a Hermitian density
// matrix D; a state when D is PSD with unit trace.
class DensityFunctional {
 public:
  DensityFunctional(Matrix density, const ToleranceContext& ctx = {});

  Eigen::Index dim() const { return d_.rows(); }
  const Matrix& density() const { return d_; }

  Complex operator()(const AlgebraElement& a) const {
    if (a.dim() != dim()) throw DimensionMismatch(dim(), a.dim());
    return (d_ * a.mat()).trace();
  }

  // Vector state |y><y|.
  static DensityFunctional vector_state(const Vector& y, const ToleranceContext& ctx = {});
  // Maximally mixed state I/n.
  static DensityFunctional tracial(Eigen::Index n);

 private:
  Matrix d_;
};

// Positivity decided along two independent routes that must agree:
// the spectral route (self-adjoint with spectrum >= -spec_tol) and the
// norm-shift route (self-adjoint with ||A - aI|| <= a for a = ||A||).
struct PositivityCheck {
  bool self_adjoint = false;
  bool spectral = false;
  bool norm_shift = false;
  double min_eigenvalue = 0.0;

  bool agree() const { return spectral == norm_shift; }
  bool positive() const { return spectral; }
};

PositivityCheck is_positive_element(const AlgebraElement& a, const ToleranceContext& ctx = {});

// Cone laws on a pair of positive elements: positive scaling, sums,
// commuting products, and A, -A >= 0 implying A = 0.
CheckReport cone_checks(const AlgebraElement& a, const AlgebraElement& b,
                        const ToleranceContext& ctx = {});

// Trace norm sum |mu_i| of the density's eigenvalues: the dual norm of the
// operator norm, equal to rho(I) exactly when rho is positive.
double functional_norm(const DensityFunctional& rho);

bool is_state(const DensityFunctional& rho, const ToleranceContext& ctx = {});

struct PurityVariance {
  bool is_pure = false;
  double variance = 0.0;
};

// Purity (rank-one density) and the dispersion rho(A^2) - rho(A)^2 of a
// self-adjoint observable in the state rho.
PurityVariance purity_and_variance(const DensityFunctional& rho, const AlgebraElement& a,
                                   const ToleranceContext& ctx = {});

// Symmetric product by its defining quadratic formula
// A o B = ((A+B)^2 - A^2 - B^2)/2.
AlgebraElement jordan_product(const AlgebraElement& a, const AlgebraElement& b);

struct StateSupNorm {
  double value = 0.0;     // sup over states of |rho(A)| = spectral radius
  double mc_lower = 0.0;  // Monte-Carlo lower bound from random states
};

// The state-supremum norm of a self-adjoint element, with a seeded random
// lower-bound probe.
StateSupNorm state_sup_norm(const AlgebraElement& a, int samples, Rng& rng,
                            const ToleranceContext& ctx = {});

// Random density matrix (PSD, unit trace) for probes and tests.
DensityFunctional random_density(Rng& rng, Eigen::Index n, const ToleranceContext& ctx = {});

}  // namespace opalg
