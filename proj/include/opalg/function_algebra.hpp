// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opalg/element.hpp"
#include "opalg/report.hpp"
#include "opalg/subalgebra.hpp"
#include "opalg/tolerance.hpp"

namespace opalg {

// The commutative C*-algebra of complex functions on a finite point set,
// with pointwise operations and the sup norm.
struct FiniteFunctionAlgebra {
  std::vector<std::string> points;

  Eigen::Index size() const { return static_cast<Eigen::Index>(points.size()); }
};

struct FunctionElement {
  Vector values;

  FunctionElement() = default;
  explicit FunctionElement(Vector v) : values(std::move(v)) {}

  FunctionElement operator+(const FunctionElement& o) const {
    return FunctionElement(values + o.values);
  }
  FunctionElement operator*(const FunctionElement& o) const {
    return FunctionElement(values.cwiseProduct(o.values));
  }
  FunctionElement operator*(Complex s) const { return FunctionElement(values * s); }
  FunctionElement adjoint() const { return FunctionElement(values.conjugate()); }
  double sup_norm() const { return values.size() ? values.cwiseAbs().maxCoeff() : 0.0; }

  static FunctionElement unit(Eigen::Index n) { return FunctionElement(Vector::Ones(n)); }
};

// A multiplicative unital functional on a commutative subalgebra, tabulated
// on the basis.
struct Character {
  Vector on_basis;
};

// Full verification of the function-algebra model: C*-axioms, spectrum =
// image, Gelfand transform = identity, pure states = point evaluations.
CheckReport finite_gelfand(const FiniteFunctionAlgebra& alg,
                           const std::vector<FunctionElement>& elements,
                           const ToleranceContext& ctx = {});

// Characters of a commutative star-closed matrix subalgebra by simultaneous
// diagonalization; throws NotCommutative naming an offending pair.
std::vector<Character> characters_of_commutative(const SubalgebraBasis& s,
                                                 const ToleranceContext& ctx = {});

// chi(A) for A in span(S), by expanding A in the basis.
Complex character_value(const SubalgebraBasis& s, const Character& chi, const AlgebraElement& a);

// Weight vector w_x = rho(indicator_x) of a positive unital functional; the
// finite measure representing the state.
RealVector riesz_markov_weights(const std::function<Complex(const FunctionElement&)>& rho,
                                const FiniteFunctionAlgebra& alg,
                                const ToleranceContext& ctx = {});

// A probability vector is extreme in the simplex iff it is a Dirac vector.
bool is_extreme_probability_vector(const RealVector& w, double tol);

}  // namespace opalg
