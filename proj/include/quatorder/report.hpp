#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace quatorder {

struct CheckResult {
  std::string id;       // dotted identifier, e.g. "split.at-p.cN"
  std::string anchor;   // the relation being checked, in words
  bool pass = false;
  std::string witness;  // parameters or the offending value
};

struct Report {
  std::vector<CheckResult> checks;

  void add(std::string id, std::string anchor, bool pass, std::string witness = {}) {
    checks.push_back({std::move(id), std::move(anchor), pass, std::move(witness)});
  }
  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  void sort() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const auto& a, const auto& b) { return a.id < b.id; });
  }
};

}  // namespace quatorder
