#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

namespace prooflab {

// Pass/fail tally for one algebraic law or inference rule.
struct LawTally {
  std::string law;
  std::size_t checked = 0;
  std::size_t failed = 0;
  // Textual instances of the first failures (bounded by kMaxCounterexamples).
  std::vector<std::string> counterexamples;
  // Diagnostic laws are reported but not expected to hold universally.
  bool diagnostic = false;

  static constexpr std::size_t kMaxCounterexamples = 8;

  void record(bool ok, const std::string& instance);
  bool passed() const noexcept { return failed == 0; }
};

class LawReport {
 public:
  LawTally& law(const std::string& name, bool diagnostic = false);
  const LawTally* find(const std::string& name) const;

  const std::deque<LawTally>& laws() const noexcept { return laws_; }

  // Failures across non-diagnostic laws.
  std::size_t violations() const noexcept;
  bool ok() const noexcept { return violations() == 0; }

  // Plain-text table: law | checked | pass | fail | counterexamples.
  std::string to_table() const;

 private:
  std::deque<LawTally> laws_;  // stable references across law()
};

}  // namespace prooflab
