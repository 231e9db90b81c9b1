// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "opalg/errors.hpp"

namespace opalg {

// Numerical tolerances threaded through every check.
//   eq_tol   - absolute entrywise comparison tolerance
//   spec_tol - eigenvalue comparison tolerance
//   rank_tol - relative singular-value cutoff for rank decisions
struct ToleranceContext {
  double eq_tol = 1e-10;
  double spec_tol = 1e-8;
  double rank_tol = 1e-10;

  void validate() const {
    if (eq_tol <= 0 || spec_tol <= 0 || rank_tol <= 0)
      throw InvalidInput("tolerances must be strictly positive");
  }
};

}  // namespace opalg
