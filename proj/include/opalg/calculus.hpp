// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opalg/element.hpp"
#include "opalg/tolerance.hpp"

namespace opalg {

// Eigendecomposition of a self-adjoint element: A = V diag(lambda) V*.
struct SpectralDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // unitary, columns orthonormal

  AlgebraElement reconstruct() const {
    return AlgebraElement(eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
                          eigenvectors.adjoint());
  }
};

// Scalar function applied through the spectral theorem.
struct ScalarFunction {
  std::function<Complex(Complex)> evaluator;
  std::optional<std::pair<double, double>> domain_hint;
  std::string name = "f";
};

// Polynomial sum a_k t^k, ascending degree.
struct PolynomialCoeffs {
  std::vector<Complex> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex eval(Complex t) const {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
  }
};

// Eigendecomposition with the self-adjointness check; imaginary parts of the
// eigenvalues are zeroed after verifying they sit below spec_tol.
SpectralDecomposition eig_self_adjoint(const AlgebraElement& a, const ToleranceContext& ctx = {});

// f(A) for normal A, evaluated per eigenvalue: f(A) = sum f(lambda_i) P_i.
// Throws NotNormal for non-normal input and PreconditionViolation when f is
// non-finite at an eigenvalue (naming the eigenvalue).
AlgebraElement apply_function(const AlgebraElement& a, const ScalarFunction& f,
                              const ToleranceContext& ctx = {});

// p(A) by Horner evaluation.
AlgebraElement apply_polynomial(const AlgebraElement& a, const PolynomialCoeffs& p);

// Chebyshev interpolant of f on [-||A||, ||A||] applied through
// apply_polynomial; the polynomial-approximation route to f(A).
AlgebraElement chebyshev_calculus(const AlgebraElement& a, const ScalarFunction& f, int degree,
                                  const ToleranceContext& ctx = {});

// Monomial coefficients of the Chebyshev interpolant of f on [-scale, scale].
PolynomialCoeffs chebyshev_interpolant(const std::function<double(double)>& f, double scale,
                                       int degree);

// Unique positive square root H of a PSD element: H = H*, H >= 0, HH = A.
// Eigenvalues in [-spec_tol, 0) are clamped to zero; anything lower throws
// NotPositive.
AlgebraElement sqrt_psd(const AlgebraElement& a, const ToleranceContext& ctx = {});

// Named function catalog used by the CLI: sqrt, exp, log, inv, abs, id.
ScalarFunction named_function(const std::string& name);

}  // namespace opalg
