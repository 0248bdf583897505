#pragma once

#include <string>
#include <vector>

namespace coalg {

// Outcome of a verification suite: one line per executed check.
struct Report {
  struct Line {
    std::string what;
    bool ok = true;
    std::string detail;
  };

  std::vector<Line> lines;

  void add(std::string what, bool ok, std::string detail = "") {
    lines.push_back({std::move(what), ok, std::move(detail)});
  }
  void merge(const Report& o) { lines.insert(lines.end(), o.lines.begin(), o.lines.end()); }
  bool ok() const {
    for (const auto& l : lines)
      if (!l.ok) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& l : lines)
      if (!l.ok) ++n;
    return n;
  }
};

}  // namespace coalg
