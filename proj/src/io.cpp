// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#include "opalg/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

namespace opalg {

namespace {

Complex parse_entry(const Json& e, const std::string& where) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
    throw InvalidInput(where + ": entry must be a [re, im] number pair");
  const double re = e[0].get<double>();
  const double im = e[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    throw InvalidInput(where + ": non-finite entry");
  return {re, im};
}

}  // namespace

Matrix parse_matrix(const Json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InvalidInput("matrix file: missing integer field 'dim'");
  const long n = j["dim"].get<long>();
  if (n < 1) throw InvalidInput("matrix file: dim must be >= 1");
  if (!j.contains("entries") || !j["entries"].is_array())
    throw InvalidInput("matrix file: missing array field 'entries'");
  const Json& rows = j["entries"];
  if (static_cast<long>(rows.size()) != n)
    throw InvalidInput("non-square input: " + std::to_string(rows.size()) + " rows for dim " +
                       std::to_string(n));
  Matrix m(n, n);
  for (long r = 0; r < n; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<long>(row.size()) != n)
      throw InvalidInput("non-square input: row " + std::to_string(r) + " has " +
                         std::to_string(row.size()) + " entries for dim " + std::to_string(n));
    for (long c = 0; c < n; ++c)
      m(r, c) = parse_entry(row[static_cast<std::size_t>(c)],
                            "entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  Json out;
  out["dim"] = m.rows();
  out["entries"] = std::move(rows);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("cannot parse " + path + ": " + e.what());
  }
  return j;
}

AlgebraElement load_matrix(const std::string& path) {
  return AlgebraElement(parse_matrix(read_json_file(path)));
}

void save_matrix(const AlgebraElement& a, const std::string& path) {
  write_file_atomic(path, matrix_to_json(a.mat()).dump(2) + "\n");
}

DensityFunctional load_state(const std::string& path, const ToleranceContext& ctx) {
  const Json j = read_json_file(path);
  if (!j.contains("dim") || !j.contains("density"))
    throw InvalidInput("state file must carry 'dim' and 'density'");
  Json as_matrix;
  as_matrix["dim"] = j["dim"];
  as_matrix["entries"] = j["density"];
  return DensityFunctional(parse_matrix(as_matrix), ctx);
}

void save_state(const DensityFunctional& rho, const std::string& path) {
  const Json m = matrix_to_json(rho.density());
  Json out;
  out["dim"] = m["dim"];
  out["density"] = m["entries"];
  write_file_atomic(path, out.dump(2) + "\n");
}

GridRep load_grid(const std::string& path) {
  const Json j = read_json_file(path);
  if (!j.contains("N") || !j.contains("L"))
    throw InvalidInput("grid file must carry 'N' and 'L'");
  return GridRep(j["N"].get<int>(), j["L"].get<double>());
}

std::pair<FiniteFunctionAlgebra, FunctionElement> load_function_element(const std::string& path) {
  const Json j = read_json_file(path);
  if (!j.contains("points") || !j["points"].is_array())
    throw InvalidInput("function file must carry array 'points'");
  if (!j.contains("values") || !j["values"].is_array())
    throw InvalidInput("function file must carry array 'values'");
  FiniteFunctionAlgebra alg;
  for (const Json& p : j["points"]) alg.points.push_back(p.get<std::string>());
  if (j["values"].size() != alg.points.size())
    throw InvalidInput("function file: values/points size mismatch");
  Vector v(static_cast<Eigen::Index>(alg.points.size()));
  for (std::size_t i = 0; i < alg.points.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = parse_entry(j["values"][i], "value " + std::to_string(i));
  return {std::move(alg), FunctionElement(std::move(v))};
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc | std::ios::binary);
    if (!out) throw InvalidInput("cannot write file: " + tmp.string());
    out << contents;
    if (!out.good()) throw InvalidInput("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace opalg
