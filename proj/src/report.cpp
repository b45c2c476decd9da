#include "layerlat/report.hpp"

#include <algorithm>

namespace layerlat {

ClauseResult &Report::clause(const std::string &name, Method method) {
  for (auto &c : clauses_)
    if (c.clause == name)
      return c;
  clauses_.push_back(ClauseResult{name, true, method, 0, {}});
  return clauses_.back();
}

bool Report::ok() const {
  return std::all_of(clauses_.begin(), clauses_.end(),
                     [](const ClauseResult &c) { return c.passed; });
}

std::vector<ClauseResult> Report::failures() const {
  std::vector<ClauseResult> out;
  std::copy_if(clauses_.begin(), clauses_.end(), std::back_inserter(out),
               [](const ClauseResult &c) { return !c.passed; });
  return out;
}

void Report::print(std::ostream &os) const {
  for (const auto &c : clauses_) {
    os << (c.passed ? "PASS " : "FAIL ") << c.clause << " ["
       << (c.method == Method::Proved ? "proved" : "tested") << ", " << c.checked
       << " checks]";
    if (!c.detail.empty())
      os << ": " << c.detail;
    os << '\n';
  }
}

} // namespace layerlat
