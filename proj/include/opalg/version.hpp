// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace opalg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace opalg
