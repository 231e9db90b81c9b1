// This file is part of opalg, a finite-dimensional operator-algebra toolkit.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

namespace opalg {

// One verified property: the measured defect against its tolerance, tagged
// with the identity it checks.
struct Check {
  std::string name;
  std::string anchor;  // the algebraic identity or theorem clause verified
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
  double time_ms = 0.0;
};

struct CheckReport {
  std::string suite;
  std::vector<Check> checks;

  Check& add(const std::string& name, const std::string& anchor, double measured, double tolerance,
             const std::string& note = "") {
    checks.push_back({name, anchor, measured, tolerance, measured <= tolerance, note, take_ms()});
    return checks.back();
  }

  Check& add_flag(const std::string& name, const std::string& anchor, bool pass,
                  const std::string& note = "") {
    checks.push_back({name, anchor, pass ? 0.0 : 1.0, 0.5, pass, note, take_ms()});
    return checks.back();
  }

  void merge(const CheckReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  void sort_by_name() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
  }

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  double worst_measured() const {
    double w = 0.0;
    for (const Check& c : checks) w = std::max(w, c.measured);
    return w;
  }

 private:
  // Elapsed time since the previous check on this report: per-check timing
  // for sequentially evaluated suites.
  double take_ms() {
    const auto now = std::chrono::steady_clock::now();
    if (!started_) {
      started_ = true;
      last_ = now;
      return 0.0;
    }
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

  bool started_ = false;
  std::chrono::steady_clock::time_point last_{};
};

}  // namespace opalg
