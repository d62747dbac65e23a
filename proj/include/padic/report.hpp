#pragma once

#include <string>
#include <vector>

namespace padic {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // first counterexample or context on failure
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
};

}  // namespace padic
