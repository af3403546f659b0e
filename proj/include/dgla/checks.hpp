#ifndef DGLA_CHECKS_HPP
#define DGLA_CHECKS_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace dgla {

/// Outcome of one exact identity check.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

using CheckList = std::vector<Check>;

inline bool all_passed(const CheckList& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

inline const Check* find_check(const CheckList& checks, const std::string& name) {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace dgla

#endif  // DGLA_CHECKS_HPP
