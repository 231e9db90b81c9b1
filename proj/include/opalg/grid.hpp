// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <utility>

#include "opalg/element.hpp"
#include "opalg/report.hpp"
#include "opalg/tolerance.hpp"
#include "opalg/weyl.hpp"

namespace opalg {

// Uniform grid on [-L, L) with N points (power of two) and the matching
// Fourier frequencies; the finite model of L^2(R). State vectors are
// normalized against the dx-weighted inner product.
struct GridRep {
  int N = 0;
  double L = 0.0;
  RealVector x;  // x_j = -L + j dx
  RealVector k;  // k_m = pi m' / L, m' in [-N/2, N/2)

  GridRep(int n_points, double half_width);

  double dx() const { return 2.0 * L / N; }

  Complex inner(const Vector& f, const Vector& g) const { return f.dot(g) * dx(); }
  double norm(const Vector& f) const { return f.norm() * std::sqrt(dx()); }
  Vector normalized(Vector f) const { return f / norm(f); }
};

// U(alpha): multiplication by e^{i alpha x}.
AlgebraElement phase_op(const GridRep& grid, double alpha);

// V(beta): translation psi(x) -> psi(x + beta), exact on band-limited
// periodic vectors (diagonal phase in Fourier space).
AlgebraElement translate_op(const GridRep& grid, double beta);

inline std::pair<AlgebraElement, AlgebraElement> schrodinger_ops(const GridRep& grid, double alpha,
                                                                 double beta) {
  return {phase_op(grid, alpha), translate_op(grid, beta)};
}

// Position q (multiplication by x) and momentum p (-i d/dx, Fourier side).
std::pair<AlgebraElement, AlgebraElement> position_momentum(const GridRep& grid);

// W(v) = e^{i alpha beta / 2} U(alpha) V(beta).
AlgebraElement weyl_op(const GridRep& grid, const PhasePoint& v);

// Apply W(v) to a vector without materializing the matrix.
Vector weyl_apply(const GridRep& grid, const PhasePoint& v, const Vector& psi);

// ||(qp - pq) psi - i psi|| for a unit vector psi.
double ccr_defect(const GridRep& grid, const Vector& psi);

// Normalized Hermite function h_n on the grid.
Vector hermite_state(const GridRep& grid, int n);

inline Vector gaussian_ground_state(const GridRep& grid) { return hermite_state(grid, 0); }

// Midpoint-rule operator integral of kernel(v) W(v) over a phase-space box,
// refined dyadically: 2^depth cells per side.
struct RiemannIntegralSpec {
  double alpha_min = 0.0, alpha_max = 0.0;
  double beta_min = 0.0, beta_max = 0.0;
  std::function<Complex(const PhasePoint&)> kernel;
  int depth = 0;
};

AlgebraElement riemann_operator_integral(const GridRep& grid, const RiemannIntegralSpec& spec);

// Gaussian-averaged Weyl integral (1/2pi) int e^{-|v|^2/4} W(v) dv over
// [-cutoff, cutoff]^2: numerically a rank-one orthogonal projection onto
// the Gaussian ground state.
struct FockProjection {
  AlgebraElement projection;
  Vector omega;  // normalized image of a generic vector under P
};

FockProjection fock_projection(const GridRep& grid, double cutoff, int depth,
                               const ToleranceContext& ctx = {});

// <Omega, W(v) Omega> for the normalized grid Gaussian; equals
// e^{-|v|^2/4} in the continuum.
Complex fock_expectation(const GridRep& grid, const PhasePoint& v);

struct Uncertainty {
  double dq = 0.0;
  double dp = 0.0;
};

// Position/momentum dispersions of a unit, well-localized state
// (boundary mass <= eq_tol).
Uncertainty uncertainty_check(const GridRep& grid, const Vector& psi,
                              const ToleranceContext& ctx = {});

// The probabilistic reading of a vector state on the multiplication
// algebra: <psi, F(q) psi> as an integral of F against |psi|^2.
CheckReport born_rule_check(const GridRep& grid, const Vector& psi,
                            const std::function<double(double)>& f);

}  // namespace opalg
