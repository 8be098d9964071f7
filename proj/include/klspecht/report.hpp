#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace klspecht {

/// Outcome of an exhaustive verification: how many instances were checked and
/// a description of each one that failed.
struct Report {
  std::string claim;
  std::size_t checked = 0;
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++checked;
    if (!ok) violations.push_back(std::forward<Describe>(describe)());
  }

  void absorb(const Report& other) {
    checked += other.checked;
    for (const auto& v : other.violations) violations.push_back(other.claim + ": " + v);
  }
};

}  // namespace klspecht
