// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#include "opalg/calculus.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

#include "opalg/spectra.hpp"

namespace opalg {

namespace {

double hermiticity_defect(const AlgebraElement& a) {
  return (a.mat() - a.mat().adjoint()).norm();
}

double normality_defect(const AlgebraElement& a) {
  return (a.mat() * a.mat().adjoint() - a.mat().adjoint() * a.mat()).norm();
}

[[noreturn]] void throw_nonfinite(Complex lambda, const std::string& fname) {
  std::ostringstream os;
  os << "function " << fname << " is not finite at eigenvalue (" << lambda.real() << ", "
     << lambda.imag() << ")";
  throw PreconditionViolation(os.str());
}

}  // namespace

SpectralDecomposition eig_self_adjoint(const AlgebraElement& a, const ToleranceContext& ctx) {
  const double scale = std::max(1.0, a.norm_fro());
  const double defect = hermiticity_defect(a);
  if (defect > ctx.eq_tol * scale) throw NotSelfAdjoint(defect);
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat());
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("Hermitian eigensolver failed", defect);
  SpectralDecomposition out;
  out.eigenvalues = es.eigenvalues();
  out.eigenvectors = es.eigenvectors();
  return out;
}

AlgebraElement apply_function(const AlgebraElement& a, const ScalarFunction& f,
                              const ToleranceContext& ctx) {
  const Eigen::Index n = a.dim();
  const double scale = std::max(1.0, a.norm_fro());

  if (hermiticity_defect(a) <= ctx.eq_tol * scale) {
    // Self-adjoint route: real eigenvalues, orthonormal eigenvectors.
    const SpectralDecomposition sd = eig_self_adjoint(a, ctx);
    Vector fvals(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Complex y = f.evaluator(Complex(sd.eigenvalues(i), 0.0));
      if (!std::isfinite(y.real()) || !std::isfinite(y.imag()))
        throw_nonfinite(sd.eigenvalues(i), f.name);
      fvals(i) = y;
    }
    return AlgebraElement(sd.eigenvectors * fvals.asDiagonal() * sd.eigenvectors.adjoint());
  }

  const double ndefect = normality_defect(a);
  if (ndefect > ctx.eq_tol * scale * scale) throw NotNormal(ndefect);

  // Normal route: the Schur factor of a normal matrix is diagonal, so the
  // Schur basis is an orthonormal eigenbasis.
  Eigen::ComplexSchur<Matrix> schur(a.mat());
  if (schur.info() != Eigen::Success)
    throw ConvergenceFailure("Schur decomposition failed", ndefect);
  Vector fvals(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex lambda = schur.matrixT()(i, i);
    const Complex y = f.evaluator(lambda);
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) throw_nonfinite(lambda, f.name);
    fvals(i) = y;
  }
  return AlgebraElement(schur.matrixU() * fvals.asDiagonal() * schur.matrixU().adjoint());
}

AlgebraElement apply_polynomial(const AlgebraElement& a, const PolynomialCoeffs& p) {
  const Eigen::Index n = a.dim();
  if (p.coeffs.empty()) return AlgebraElement::zero(n);
  Matrix acc = Matrix::Identity(n, n) * p.coeffs.back();
  for (auto it = std::next(p.coeffs.rbegin()); it != p.coeffs.rend(); ++it)
    acc = (acc * a.mat() + *it * Matrix::Identity(n, n)).eval();
  return AlgebraElement(acc);
}

PolynomialCoeffs chebyshev_interpolant(const std::function<double(double)>& f, double scale,
                                       int degree) {
  const int m = degree + 1;
  const double pi = 3.14159265358979323846;
  // Values at Chebyshev nodes of the first kind, mapped to [-scale, scale].
  std::vector<double> vals(m);
  for (int j = 0; j < m; ++j) vals[j] = f(scale * std::cos(pi * (j + 0.5) / m));
  // Chebyshev coefficients by the discrete cosine sum.
  std::vector<double> cheb(m);
  for (int k = 0; k < m; ++k) {
    double acc = 0.0;
    for (int j = 0; j < m; ++j) acc += vals[j] * std::cos(pi * k * (j + 0.5) / m);
    cheb[k] = (k == 0 ? 1.0 : 2.0) * acc / m;
  }
  // Convert sum c_k T_k(u) to monomials in u via the T recurrence, then
  // substitute u = t / scale.
  std::vector<double> mono(m, 0.0);
  std::vector<double> t_prev{1.0}, t_curr{0.0, 1.0};
  for (int k = 0; k < m; ++k) {
    const std::vector<double>& tk = (k == 0) ? t_prev : t_curr;
    for (std::size_t i = 0; i < tk.size(); ++i) mono[i] += cheb[k] * tk[i];
    if (k >= 1 && k + 1 < m) {
      std::vector<double> t_next(k + 2, 0.0);
      for (std::size_t i = 0; i < t_curr.size(); ++i) t_next[i + 1] += 2.0 * t_curr[i];
      for (std::size_t i = 0; i < t_prev.size(); ++i) t_next[i] -= t_prev[i];
      t_prev = std::move(t_curr);
      t_curr = std::move(t_next);
    }
  }
  PolynomialCoeffs out;
  out.coeffs.resize(m);
  double s = 1.0;
  for (int i = 0; i < m; ++i) {
    out.coeffs[i] = mono[i] / s;
    s *= scale;
  }
  return out;
}

AlgebraElement chebyshev_calculus(const AlgebraElement& a, const ScalarFunction& f, int degree,
                                  const ToleranceContext& ctx) {
  if (degree < 0) throw PreconditionViolation("interpolation degree must be >= 0");
  const double scale = std::max(1.0, a.norm_fro());
  if (hermiticity_defect(a) > ctx.eq_tol * scale) throw NotSelfAdjoint(hermiticity_defect(a));
  const double radius = op_norm(a);
  auto real_f = [&](double t) {
    const Complex y = f.evaluator(Complex(t, 0.0));
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) throw_nonfinite(t, f.name);
    return y.real();
  };
  if (radius == 0.0) {
    Matrix m = Matrix::Identity(a.dim(), a.dim()) * Complex(real_f(0.0), 0.0);
    return AlgebraElement(m);
  }
  const PolynomialCoeffs p = chebyshev_interpolant(real_f, radius, degree);
  const AlgebraElement result = apply_polynomial(a, p);
  // Symmetrize away the roundoff skew; the interpolant of a real function of
  // a self-adjoint element is self-adjoint.
  return AlgebraElement(((result.mat() + result.mat().adjoint()) / 2.0).eval());
}

AlgebraElement sqrt_psd(const AlgebraElement& a, const ToleranceContext& ctx) {
  const SpectralDecomposition sd = eig_self_adjoint(a, ctx);
  const Eigen::Index n = a.dim();
  Vector roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double lambda = sd.eigenvalues(i);
    if (lambda < -ctx.spec_tol) throw NotPositive(lambda);
    if (lambda < 0.0) lambda = 0.0;
    roots(i) = std::sqrt(lambda);
  }
  Matrix h = sd.eigenvectors * roots.asDiagonal() * sd.eigenvectors.adjoint();
  return AlgebraElement(((h + h.adjoint()) / 2.0).eval());
}

ScalarFunction named_function(const std::string& name) {
  if (name == "sqrt")
    return {[](Complex z) { return std::sqrt(z); }, std::nullopt, "sqrt"};
  if (name == "exp")
    return {[](Complex z) { return std::exp(z); }, std::nullopt, "exp"};
  if (name == "log")
    return {[](Complex z) { return std::log(z); }, std::nullopt, "log"};
  if (name == "inv")
    return {[](Complex z) { return 1.0 / z; }, std::nullopt, "inv"};
  if (name == "abs")
    return {[](Complex z) { return Complex(std::abs(z), 0.0); }, std::nullopt, "abs"};
  if (name == "id")
    return {[](Complex z) { return z; }, std::nullopt, "id"};
  throw InvalidInput("unknown function name: " + name);
}

}  // namespace opalg
