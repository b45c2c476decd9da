#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace layerlat {

/// How a clause was established: exhaustively or structurally ("proved"),
/// or on a finite sample of an infinite carrier ("tested").
enum class Method { Proved, Tested };

struct ClauseResult {
  std::string clause;
  bool passed = true;
  Method method = Method::Proved;
  std::size_t checked = 0;
  std::string detail; // witness of the first failure, or a note
};

/// Per-clause outcome list shared by validation, law checks and embedding
/// checks.
class Report {
public:
  void add(ClauseResult r) { clauses_.push_back(std::move(r)); }

  /// Records a pass for `clause` unless a failure was already recorded
  /// under the same name.
  ClauseResult &clause(const std::string &name, Method method = Method::Proved);

  bool ok() const;
  const std::vector<ClauseResult> &clauses() const noexcept { return clauses_; }
  std::vector<ClauseResult> failures() const;

  void print(std::ostream &os) const;

private:
  std::vector<ClauseResult> clauses_;
};

} // namespace layerlat
