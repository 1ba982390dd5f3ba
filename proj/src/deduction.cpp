#include "prooflab/deduction.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "prooflab/error.hpp"
#include "truth_table.hpp"

namespace prooflab {

std::string index_set_text(const IndexSet& h) {
  std::string out = "{";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(h[i]);
  }
  return out + "}";
}

Deduction::Deduction(std::vector<PropClass> steps, SigmaPrime context)
    : steps_(std::move(steps)), context_(std::move(context)) {
  if (steps_.empty()) throw std::invalid_argument("a deduction needs at least one step");
}

Deduction Deduction::prefix(std::size_t u) const {
  if (u == 0 || u > steps_.size()) throw std::out_of_range("Deduction::prefix");
  return Deduction({steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(u)}, context_);
}

std::string_view clause_label(Clause c) noexcept {
  switch (c) {
    case Clause::InBase: return "a";
    case Clause::Conjunction: return "c";
    case Clause::Disjunction: return "d";
    case Clause::BaseEntailed: return "b";
    case Clause::InExtension: return "sigma'";
    case Clause::Invalid: return "invalid";
  }
  return "?";
}

bool DeductionReport::valid() const noexcept { return !first_invalid().has_value(); }

std::optional<std::size_t> DeductionReport::first_invalid() const noexcept {
  for (const auto& s : steps) {
    if (s.clause == Clause::Invalid) return s.index;
  }
  return std::nullopt;
}

std::string DeductionReport::to_text(const Deduction& d) const {
  std::ostringstream out;
  for (const auto& s : steps) {
    out << s.index << "  " << d.step(s.index).text() << "  " << clause_label(s.clause);
    if (!s.indices.empty()) out << ' ' << index_set_text(s.indices);
    out << '\n';
  }
  return out.str();
}

namespace {

void check_enumeration_cap(std::size_t u, const DeductionLimits& limits) {
  if (u - 1 > limits.max_steps || u - 1 >= 63) {
    throw Error(ErrorKind::ResourceLimit,
                "step " + std::to_string(u) + " has " + std::to_string(u - 1) +
                    " earlier steps; subset enumeration is capped at " +
                    std::to_string(limits.max_steps));
  }
}

struct SubsetSearch {
  const std::vector<detail::PackedTable>& tables;  // steps 1..u-1
  const detail::PackedTable& goal;
  std::vector<std::uint64_t> hits;

  // Extends mask with indices >= next; and_acc/or_acc hold the combination
  // over mask (mask nonempty).
  void walk(std::size_t next, std::uint64_t mask, const detail::PackedTable& and_acc,
            const detail::PackedTable& or_acc) {
    if (and_acc.implies(goal) || or_acc.implies(goal)) hits.push_back(mask);
    for (std::size_t k = next; k < tables.size(); ++k) {
      auto a = and_acc;
      a &= tables[k];
      auto o = or_acc;
      o |= tables[k];
      walk(k + 1, mask | (std::uint64_t{1} << k), a, o);
    }
  }
};

IndexSet mask_to_set(std::uint64_t mask) {
  IndexSet h;
  for (std::size_t k = 0; mask; ++k, mask >>= 1) {
    if (mask & 1u) h.push_back(k + 1);
  }
  return h;
}

// Unique argmax of gamma; throws std::logic_error on a tie.
const IndexSet& argmax_gamma(const std::vector<IndexSet>& candidates) {
  const IndexSet* best = nullptr;
  BigInt best_value = 0;
  bool tie = false;
  for (const auto& h : candidates) {
    BigInt g = gamma(h);
    if (!best || g > best_value) {
      best = &h;
      best_value = std::move(g);
      tie = false;
    } else if (g == best_value) {
      tie = true;
    }
  }
  if (!best) throw std::logic_error("argmax_gamma on an empty candidate list");
  if (tie) throw std::logic_error("gamma argmax is not unique");
  return *best;
}

}  // namespace

std::vector<IndexSet> omega(const Deduction& d, std::size_t u, const DeductionLimits& limits) {
  if (u == 0 || u > d.size()) throw std::out_of_range("omega: step index out of range");
  if (u == 1) return {};
  check_enumeration_cap(u, limits);

  std::vector<std::string> universe;
  for (std::size_t i = 1; i <= u; ++i) universe = detail::merge_support(universe, d.step(i).support());
  detail::check_atom_cap(universe.size(), limits.atom_cap);

  std::vector<detail::PackedTable> tables;
  tables.reserve(u - 1);
  for (std::size_t i = 1; i < u; ++i) tables.push_back(detail::expand(d.step(i), universe));
  const auto goal = detail::expand(d.step(u), universe);

  SubsetSearch search{tables, goal, {}};
  for (std::size_t k = 0; k < tables.size(); ++k) {
    search.walk(k + 1, std::uint64_t{1} << k, tables[k], tables[k]);
  }
  std::vector<IndexSet> out;
  out.reserve(search.hits.size());
  for (auto mask : search.hits) out.push_back(mask_to_set(mask));
  std::sort(out.begin(), out.end());
  return out;
}

DeductionReport check_deduction(const Deduction& d, const DeductionLimits& limits) {
  const auto& base = d.context().base();
  DeductionReport report;
  for (std::size_t i = 1; i <= d.size(); ++i) {
    const PropClass& step = d.step(i);
    StepJustification j;
    j.index = i;
    // Tautologies belong to every extension, so they count as premises too.
    if (step.is_tautology() || std::binary_search(base.begin(), base.end(), step)) {
      j.clause = Clause::InBase;
    } else if (auto candidates = omega(d, i, limits); !candidates.empty()) {
      j.indices = argmax_gamma(candidates);
      std::vector<PropClass> chosen;
      for (auto h : j.indices) chosen.push_back(d.step(h));
      j.clause = entails(big_and(chosen, limits.atom_cap), step) ? Clause::Conjunction
                                                                  : Clause::Disjunction;
    } else if (std::any_of(base.begin(), base.end(),
                           [&](const PropClass& b) { return entails(b, step); })) {
      j.clause = Clause::BaseEntailed;
    } else if (d.context().contains(step)) {
      j.clause = Clause::InExtension;
    }
    report.steps.push_back(std::move(j));
  }
  return report;
}

std::uint64_t nth_prime(std::size_t j) {
  if (j == 0) throw std::invalid_argument("nth_prime is 1-based");
  static const std::vector<std::uint64_t> small = [] {
    constexpr std::size_t kLimit = 8000;  // the 1000th prime is 7919
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::size_t n = 2; n <= kLimit; ++n) {
      if (composite[n]) continue;
      primes.push_back(n);
      for (std::size_t m = n * n; m <= kLimit; m += n) composite[m] = true;
    }
    return primes;
  }();
  if (j <= small.size()) return small[j - 1];
  std::size_t count = small.size();
  std::uint64_t candidate = small.back();
  while (count < j) {
    candidate += 2;
    bool prime = true;
    for (std::uint64_t p : small) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    for (std::uint64_t f = small.back() + 2; prime && f * f <= candidate; f += 2) {
      if (candidate % f == 0) prime = false;
    }
    if (prime) ++count;
  }
  return candidate;
}

BigInt gamma(const IndexSet& h) {
  if (h.empty()) throw Error(ErrorKind::EmptyList, "gamma needs a nonempty index set");
  BigInt product = 1;
  for (auto index : h) product *= nth_prime(index);
  return product;
}

std::string Interpretation::to_text() const {
  std::string out;
  for (std::size_t i = 0; i < readings_.size(); ++i) {
    out += std::to_string(i + 1) + ": ";
    out += readings_[i].empty() ? "0" : index_set_text(readings_[i]);
    out += '\n';
  }
  return out;
}

Interpretation Interpretation::from_text(std::string_view text) {
  std::vector<IndexSet> readings;
  std::size_t offset = 0;
  auto fail = [&](const std::string& msg) { throw SyntaxError(offset, "interpretation: " + msg); };
  auto parse_number = [&](std::string_view s) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail("bad number '" + std::string(s) + "'");
    return value;
  };
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (!line.empty()) {
      const std::size_t colon = line.find(": ");
      if (colon == std::string_view::npos) fail("expected 'i: reading'");
      if (parse_number(line.substr(0, colon)) != readings.size() + 1) fail("indices must be 1..n in order");
      std::string_view body = line.substr(colon + 2);
      IndexSet h;
      if (body != "0") {
        if (body.size() < 3 || body.front() != '{' || body.back() != '}') fail("expected 0 or {h,...}");
        body = body.substr(1, body.size() - 2);
        while (true) {
          const std::size_t comma = body.find(',');
          h.push_back(parse_number(body.substr(0, comma)));
          if (comma == std::string_view::npos) break;
          body.remove_prefix(comma + 1);
        }
        std::sort(h.begin(), h.end());
        h.erase(std::unique(h.begin(), h.end()), h.end());
      }
      readings.push_back(std::move(h));
    }
    offset = end + 1;
  }
  return Interpretation(std::move(readings));
}

Interpretation induce_interpretation(const Deduction& d, const DeductionLimits& limits) {
  const auto report = check_deduction(d, limits);
  if (auto bad = report.first_invalid()) {
    throw Error(ErrorKind::InvalidDeduction, "step " + std::to_string(*bad) + " is not justified");
  }
  const std::size_t n = d.size();
  std::vector<IndexSet> readings(n);
  std::vector<bool> visited(n + 1, false);
  std::vector<std::size_t> pending{n};
  visited[n] = true;
  while (!pending.empty()) {
    const std::size_t u = pending.back();
    pending.pop_back();
    const auto candidates = omega(d, u, limits);
    if (candidates.empty()) continue;
    readings[u - 1] = argmax_gamma(candidates);
    // Reverse push so the smallest index is expanded first.
    const auto& h = readings[u - 1];
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
      if (!visited[*it]) {
        visited[*it] = true;
        pending.push_back(*it);
      }
    }
  }
  return Interpretation(std::move(readings));
}

bool validate_interpretation(const Deduction& d, const Interpretation& phi) {
  if (phi.size() != d.size()) return false;
  for (std::size_t i = 1; i <= d.size(); ++i) {
    const PropClass& step = d.step(i);
    if (phi.is_premise(i)) {
      if (!d.context().contains(step)) return false;
      continue;
    }
    const IndexSet& h = phi.indices(i);
    if (!std::is_sorted(h.begin(), h.end()) || std::adjacent_find(h.begin(), h.end()) != h.end()) {
      return false;
    }
    if (h.front() < 1 || h.back() >= i) return false;
    std::vector<PropClass> chosen;
    for (auto index : h) chosen.push_back(d.step(index));
    if (!entails(big_and(chosen), step) && !entails(big_or(chosen), step)) return false;
  }
  return true;
}

std::vector<InferenceRule> classical_rules() {
  auto implies = [](const PropClass& a, const PropClass& b) { return class_or(class_not(a), b); };
  using V = std::vector<PropClass>;
  using C = const PropClass&;
  return {
      {"modus ponens {a, a->b} |- b", [=](C a, C b) { return V{a, implies(a, b)}; },
       [](C, C b) { return b; }},
      {"a & b |- a", [](C a, C b) { return V{class_and(a, b)}; }, [](C a, C) { return a; }},
      {"a & b |- b", [](C a, C b) { return V{class_and(a, b)}; }, [](C, C b) { return b; }},
      {"a |- a | b", [](C a, C) { return V{a}; }, [](C a, C b) { return class_or(a, b); }},
      {"b |- a | b", [](C, C b) { return V{b}; }, [](C a, C b) { return class_or(a, b); }},
      {"{a, b} |- b | a", [](C a, C b) { return V{a, b}; }, [](C a, C b) { return class_or(b, a); }},
      {"{a | b, ~a} |- b", [](C a, C b) { return V{class_or(a, b), class_not(a)}; },
       [](C, C b) { return b; }},
      {"{a -> b, ~b} |- ~a", [=](C a, C b) { return V{implies(a, b), class_not(b)}; },
       [](C a, C) { return class_not(a); }},
      {"a |- ~~a", [](C a, C) { return V{a}; }, [](C a, C) { return class_not(class_not(a)); }},
      {"~~a |- a", [](C a, C) { return V{class_not(class_not(a))}; }, [](C a, C) { return a; }},
  };
}

LawReport classical_rules_report(std::size_t atom_budget, std::span<const InferenceRule> rules) {
  if (atom_budget > 3) {
    throw Error(ErrorKind::ResourceLimit, "rule instantiation supports at most 3 atoms");
  }
  static const char* const kNames[] = {"p", "q", "r"};
  std::vector<std::string> names(kNames, kNames + atom_budget);
  const auto classes = all_classes(names);
  LawReport report;
  for (const auto& rule : rules) {
    auto& tally = report.law(rule.name);
    for (const auto& a : classes) {
      for (const auto& b : classes) {
        const auto premises = rule.premises(a, b);
        tally.record(entails(big_and(premises), rule.conclusion(a, b)),
                     "a=" + a.text() + " b=" + b.text());
      }
    }
  }
  return report;
}

LawReport classical_rules_report(std::size_t atom_budget) {
  const auto rules = classical_rules();
  return classical_rules_report(atom_budget, rules);
}

}  // namespace prooflab
