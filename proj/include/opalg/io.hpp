// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>
#include <string>

#include "opalg/element.hpp"
#include "opalg/function_algebra.hpp"
#include "opalg/grid.hpp"
#include "opalg/states.hpp"

namespace opalg {

using Json = nlohmann::ordered_json;

// Matrix file format: {"dim": n, "entries": [[[re, im], ...], ...]},
// row-major. Readers reject non-square or non-finite input.
Matrix parse_matrix(const Json& j);
Json matrix_to_json(const Matrix& m);

AlgebraElement load_matrix(const std::string& path);
void save_matrix(const AlgebraElement& a, const std::string& path);

// State file format: {"dim": n, "density": entries}.
DensityFunctional load_state(const std::string& path, const ToleranceContext& ctx = {});
void save_state(const DensityFunctional& rho, const std::string& path);

// Grid configuration {"N": ..., "L": ...}.
GridRep load_grid(const std::string& path);

// Function-algebra element {"points": [...], "values": [[re, im], ...]}.
std::pair<FiniteFunctionAlgebra, FunctionElement> load_function_element(const std::string& path);

Json read_json_file(const std::string& path);

// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace opalg
