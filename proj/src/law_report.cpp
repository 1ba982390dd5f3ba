#include "prooflab/law_report.hpp"

#include <algorithm>
#include <sstream>

namespace prooflab {

void LawTally::record(bool ok, const std::string& instance) {
  ++checked;
  if (ok) return;
  ++failed;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(instance);
}

LawTally& LawReport::law(const std::string& name, bool diagnostic) {
  for (auto& tally : laws_) {
    if (tally.law == name) return tally;
  }
  LawTally tally;
  tally.law = name;
  tally.diagnostic = diagnostic;
  laws_.push_back(std::move(tally));
  return laws_.back();
}

const LawTally* LawReport::find(const std::string& name) const {
  auto it = std::find_if(laws_.begin(), laws_.end(),
                         [&](const LawTally& t) { return t.law == name; });
  return it == laws_.end() ? nullptr : &*it;
}

std::size_t LawReport::violations() const noexcept {
  std::size_t total = 0;
  for (const auto& tally : laws_) {
    if (!tally.diagnostic) total += tally.failed;
  }
  return total;
}

std::string LawReport::to_table() const {
  std::size_t width = 3;
  for (const auto& tally : laws_) width = std::max(width, tally.law.size());
  std::ostringstream out;
  auto pad = [&](const std::string& s) { return s + std::string(width - s.size(), ' '); };
  out << pad("law") << " | checked | pass | fail | kind       | counterexamples\n";
  for (const auto& tally : laws_) {
    out << pad(tally.law) << " | " << tally.checked << " | " << (tally.checked - tally.failed)
        << " | " << tally.failed << " | " << (tally.diagnostic ? "diagnostic" : "law       ")
        << " | ";
    for (std::size_t i = 0; i < tally.counterexamples.size(); ++i) {
      if (i) out << "; ";
      out << tally.counterexamples[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace prooflab
