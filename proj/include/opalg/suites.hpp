// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opalg/report.hpp"
#include "opalg/tolerance.hpp"

namespace opalg {

// Configuration shared by the verification suites. The seed fully
// determines every randomized check.
struct SuiteConfig {
  std::uint64_t seed = 42;
  ToleranceContext ctx;
  int grid_points = 512;
  double grid_half_width = 10.0;
  int integral_depth = 5;
  double integral_cutoff = 10.0;
  std::vector<int> moduli = {3, 5, 7};
};

CheckReport suite_spectra(const SuiteConfig& cfg);
CheckReport suite_calculus(const SuiteConfig& cfg);
CheckReport suite_states(const SuiteConfig& cfg);
CheckReport suite_gns(const SuiteConfig& cfg);
CheckReport suite_weyl(const SuiteConfig& cfg);
CheckReport suite_svn(const SuiteConfig& cfg);
CheckReport suite_schrodinger(const SuiteConfig& cfg);

// All of the above, sorted by check name.
CheckReport suite_all(const SuiteConfig& cfg);

}  // namespace opalg
