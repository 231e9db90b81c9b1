// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#include "opalg/poly_ccr.hpp"

#include <string>

namespace opalg {

ExactPoly apply_position(const ExactPoly& c) {
  ExactPoly out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k];
  return out;
}

ExactPoly apply_momentum(const ExactPoly& c) {
  if (c.size() <= 1) return {};
  ExactPoly out(c.size() - 1);
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    const long long deg = static_cast<long long>(k) + 1;
    // -i * deg * c_{k+1}
    out[k] = GaussianInt{0, -deg} * c[k + 1];
  }
  return out;
}

namespace {

ExactPoly apply_position_power(ExactPoly c, int n) {
  for (int i = 0; i < n; ++i) c = apply_position(c);
  return c;
}

bool exactly_equal(const ExactPoly& a, const ExactPoly& b) {
  const std::size_t m = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < m; ++k) {
    const GaussianInt av = k < a.size() ? a[k] : GaussianInt{};
    const GaussianInt bv = k < b.size() ? b[k] : GaussianInt{};
    if (!(av == bv)) return false;
  }
  return true;
}

}  // namespace

CheckReport poly_commutator_check(int n_max, int max_degree) {
  if (max_degree < n_max)
    throw PreconditionViolation("max_degree must be >= n_max so the identity acts within the "
                                "truncated space");
  CheckReport report;
  report.suite = "poly_ccr";

  for (int n = 1; n <= n_max; ++n) {
    bool exact = true;
    // Check on every monomial basis vector t^d the two sides of
    // [X^n, P] = i n X^{n-1}.
    for (int d = 0; d <= max_degree - n; ++d) {
      ExactPoly mono(static_cast<std::size_t>(d) + 1);
      mono[static_cast<std::size_t>(d)] = GaussianInt{1, 0};

      const ExactPoly lhs_a = apply_position_power(apply_momentum(mono), n);
      const ExactPoly lhs_b = apply_momentum(apply_position_power(mono, n));
      ExactPoly lhs(std::max(lhs_a.size(), lhs_b.size()));
      for (std::size_t k = 0; k < lhs.size(); ++k) {
        const GaussianInt av = k < lhs_a.size() ? lhs_a[k] : GaussianInt{};
        const GaussianInt bv = k < lhs_b.size() ? lhs_b[k] : GaussianInt{};
        lhs[k] = av - bv;
      }

      ExactPoly rhs = apply_position_power(mono, n - 1);
      for (GaussianInt& g : rhs) g = GaussianInt{0, n} * g;  // i n *

      if (!exactly_equal(lhs, rhs)) exact = false;
    }
    report.add_flag("commutator_n" + std::to_string(n), "[x^n, p] = i hbar n x^{n-1} (hbar = 1)",
                    exact, exact ? "exact (zero residual)" : "mismatch");
  }
  return report;
}

}  // namespace opalg
