#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordan/exact/poly_matrix.hpp"

namespace jordan {

/// Outcome of one named identity check.
struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Ordered list of checks produced by a verifier. Failures are data, not errors.
struct Report {
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }

  /// Records a matrix identity actual == expected, keeping the first offending entry.
  void add_matrix(std::string name, const PolyMatrix& actual, const PolyMatrix& expected) {
    if (actual.rows() != expected.rows() || actual.cols() != expected.cols()) {
      add(std::move(name), false, "shape mismatch");
      return;
    }
    const auto bad = first_mismatch(actual, expected);
    add(std::move(name), !bad, bad ? bad->describe() : std::string{});
  }

  void append(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
  }

  /// First failing check rendered as "name: detail", or empty when everything passed.
  std::string first_failure() const {
    for (const auto& c : checks) {
      if (!c.pass) return c.detail.empty() ? c.name : c.name + ": " + c.detail;
    }
    return {};
  }
};

}  // namespace jordan
