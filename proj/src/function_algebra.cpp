// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#include "opalg/function_algebra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "opalg/spectra.hpp"

namespace opalg {

CheckReport finite_gelfand(const FiniteFunctionAlgebra& alg,
                           const std::vector<FunctionElement>& elements,
                           const ToleranceContext& ctx) {
  CheckReport report;
  report.suite = "finite_gelfand";
  const Eigen::Index n = alg.size();

  double cstar_defect = 0.0, comm_defect = 0.0, gelfand_defect = 0.0, spec_defect = 0.0;
  double char_defect = 0.0;
  for (const FunctionElement& f : elements) {
    if (f.values.size() != n) throw DimensionMismatch(n, f.values.size());
    // ||f* f|| = ||f||^2 holds pointwise for the sup norm.
    const double lhs = (f.adjoint() * f).sup_norm();
    const double rhs = f.sup_norm() * f.sup_norm();
    cstar_defect = std::max(cstar_defect, std::abs(lhs - rhs));
    // Spectrum of f acting by multiplication equals the image multiset.
    const AlgebraElement mult_op(Matrix(f.values.asDiagonal()));
    std::vector<Complex> image(f.values.data(), f.values.data() + n);
    spec_defect =
        std::max(spec_defect, multiset_distance(spectrum(mult_op, ctx).eigenvalues, image));
    // Point evaluations are multiplicative unital functionals, and the
    // Gelfand transform tabulated over them reproduces f.
    for (Eigen::Index x = 0; x < n; ++x) {
      const auto delta_x = [x](const FunctionElement& h) { return h.values(x); };
      gelfand_defect = std::max(gelfand_defect, std::abs(delta_x(f) - f.values(x)));
      for (const FunctionElement& g : elements) {
        char_defect =
            std::max(char_defect, std::abs(delta_x(f * g) - delta_x(f) * delta_x(g)));
        comm_defect =
            std::max(comm_defect, ((f * g).values - (g * f).values).cwiseAbs().maxCoeff());
      }
    }
  }
  report.add("cstar_identity", "||f* f|| = ||f||^2 (sup norm)", cstar_defect, 1e-12);
  report.add("commutative", "fg = gf pointwise", comm_defect, 0.0);
  report.add("spectrum_is_image", "spectr(f) = Img(f)", spec_defect, ctx.spec_tol);
  report.add("point_evaluations_multiplicative", "delta_x(fg) = delta_x(f) delta_x(g)",
             char_defect, 1e-12);
  report.add("gelfand_identity", "f -> f^ is the identity on C(X)", gelfand_defect, 0.0);

  // Pure states are exactly the point evaluations: Dirac vectors are the
  // extreme points of the probability simplex.
  bool extremes_ok = true;
  for (Eigen::Index x = 0; x < n; ++x) {
    RealVector dirac = RealVector::Zero(n);
    dirac(x) = 1.0;
    if (!is_extreme_probability_vector(dirac, ctx.eq_tol)) extremes_ok = false;
  }
  if (n >= 2) {
    RealVector mixed = RealVector::Constant(n, 1.0 / static_cast<double>(n));
    if (is_extreme_probability_vector(mixed, ctx.eq_tol)) extremes_ok = false;
  }
  report.add_flag("pure_states_are_point_evaluations",
                  "extreme probability vectors are the Dirac vectors", extremes_ok);
  return report;
}

std::vector<Character> characters_of_commutative(const SubalgebraBasis& s,
                                                 const ToleranceContext& ctx) {
  const std::size_t m = s.size();
  const Eigen::Index n = s.ambient_dim;

  // Star closure and commutativity are preconditions.
  for (std::size_t i = 0; i < m; ++i) {
    if (projection_residual(s, s.basis[i].adjoint()) > std::sqrt(ctx.rank_tol))
      throw PreconditionViolation("subalgebra is not star-closed");
    for (std::size_t j = i + 1; j < m; ++j) {
      const double defect = commutator(s.basis[i], s.basis[j]).norm_fro();
      if (defect > ctx.eq_tol * std::max(1.0, s.basis[i].norm_fro() * s.basis[j].norm_fro()))
        throw NotCommutative(i, j, defect);
    }
  }

  // A generic self-adjoint combination separates the joint eigenspaces; its
  // eigenbasis simultaneously diagonalizes the algebra.
  Rng rng(0x9e3779b97f4a7c15ull);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Matrix g = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < m; ++i) {
      const Matrix& b = s.basis[i].mat();
      g += rng.gaussian() * (b + b.adjoint());
      g += rng.gaussian() * (Complex(0, 1) * (b - b.adjoint()));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es((g + g.adjoint()).eval() / 2.0);
    const Matrix v = es.eigenvectors();

    bool diagonalizes = true;
    Matrix diag_table(n, static_cast<Eigen::Index>(m));  // column i = diag of V* B_i V
    for (std::size_t i = 0; i < m && diagonalizes; ++i) {
      const Matrix t = v.adjoint() * s.basis[i].mat() * v;
      const double off = (t - Matrix(t.diagonal().asDiagonal())).norm();
      if (off > 1e3 * ctx.eq_tol * std::max(1.0, t.norm())) diagonalizes = false;
      diag_table.col(static_cast<Eigen::Index>(i)) = t.diagonal();
    }
    if (!diagonalizes) continue;

    // Group coordinates with identical diagonal patterns into one character.
    std::vector<Character> out;
    std::vector<bool> seen(n, false);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (seen[r]) continue;
      for (Eigen::Index q = r + 1; q < n; ++q) {
        if (seen[q]) continue;
        if ((diag_table.row(r) - diag_table.row(q)).cwiseAbs().maxCoeff() <= ctx.spec_tol)
          seen[q] = true;
      }
      Character chi;
      chi.on_basis = diag_table.row(r).transpose();
      out.push_back(std::move(chi));
    }
    return out;
  }
  throw ConvergenceFailure("failed to find a separating element for the commutative algebra", 0.0);
}

Complex character_value(const SubalgebraBasis& s, const Character& chi, const AlgebraElement& a) {
  const Vector c = s.coords(a);
  return chi.on_basis.transpose() * c;
}

RealVector riesz_markov_weights(const std::function<Complex(const FunctionElement&)>& rho,
                                const FiniteFunctionAlgebra& alg, const ToleranceContext& ctx) {
  const Eigen::Index n = alg.size();
  RealVector w(n);
  for (Eigen::Index x = 0; x < n; ++x) {
    Vector ind = Vector::Zero(n);
    ind(x) = 1.0;
    const Complex v = rho(FunctionElement(std::move(ind)));
    if (std::abs(v.imag()) > ctx.eq_tol || v.real() < -ctx.eq_tol)
      throw PreconditionViolation("functional is not positive on indicator functions");
    w(x) = v.real();
  }
  if (std::abs(w.sum() - 1.0) > ctx.eq_tol)
    throw PreconditionViolation("functional is not unital: rho(1) = " + std::to_string(w.sum()));
  return w;
}

bool is_extreme_probability_vector(const RealVector& w, double tol) {
  int support = 0;
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w(i) > tol) ++support;
  return support == 1;
}

}  // namespace opalg
