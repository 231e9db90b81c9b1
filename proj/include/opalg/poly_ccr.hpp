// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "opalg/errors.hpp"
#include "opalg/report.hpp"

namespace opalg {

// Exact Gaussian-integer scalar: a + b i with 64-bit integer parts. The
// polynomial commutator identities close over these, so the checks carry
// no floating-point error at all.
struct GaussianInt {
  long long re = 0;
  long long im = 0;

  friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianInt operator-(GaussianInt a, GaussianInt b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(GaussianInt a, GaussianInt b) { return a.re == b.re && a.im == b.im; }
  bool is_zero() const { return re == 0 && im == 0; }
};

// A polynomial sum c_k t^k as its coefficient vector; index = degree.
using ExactPoly = std::vector<GaussianInt>;

// X: multiply by t (shift coefficients up one degree).
ExactPoly apply_position(const ExactPoly& c);

// P = -i d/dt: (Pc)_k = -i (k+1) c_{k+1}.
ExactPoly apply_momentum(const ExactPoly& c);

// Verify [X^n, P] = i n X^{n-1} exactly (zero residual) as maps on
// polynomials of degree <= max_degree - n, for every n <= n_max.
CheckReport poly_commutator_check(int n_max, int max_degree);

}  // namespace opalg
