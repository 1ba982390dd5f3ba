#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "prooflab/law_report.hpp"
#include "prooflab/prop_class.hpp"
#include "prooflab/sigma_prime.hpp"

namespace prooflab {

using BigInt = boost::multiprecision::cpp_int;

// Sorted, distinct, 1-based step indices.
using IndexSet = std::vector<std::size_t>;

std::string index_set_text(const IndexSet& h);  // "{1,2}"

// A finite sequence of classes read against a maximal consistent extension.
// Validity is a property checked by check_deduction, not a constructor
// requirement.
class Deduction {
 public:
  // Throws std::invalid_argument on an empty step list.
  Deduction(std::vector<PropClass> steps, SigmaPrime context);

  std::size_t size() const noexcept { return steps_.size(); }
  // 1-based.
  const PropClass& step(std::size_t i) const { return steps_.at(i - 1); }
  const std::vector<PropClass>& steps() const noexcept { return steps_; }
  const SigmaPrime& context() const noexcept { return context_; }

  // The first u steps, same context.
  Deduction prefix(std::size_t u) const;

 private:
  std::vector<PropClass> steps_;
  SigmaPrime context_;
};

struct DeductionLimits {
  // Largest number of earlier steps whose subsets may be enumerated.
  std::size_t max_steps = 20;
  std::size_t atom_cap = kDefaultAtomCap;
};

// Which clause justifies a step. Over the extension clauses (a) and (b)
// collapse into membership; the report still says whether the base set
// alone would have sufficed.
enum class Clause {
  InBase,          // (a) the step is one of the base premises
  Conjunction,     // (c) the conjunction of earlier steps entails it
  Disjunction,     // (d) the disjunction of earlier steps entails it
  BaseEntailed,    // (b) some base premise entails it
  InExtension,     // member of the extension only
  Invalid,
};

std::string_view clause_label(Clause c) noexcept;

struct StepJustification {
  std::size_t index = 0;
  Clause clause = Clause::Invalid;
  IndexSet indices;  // for Conjunction / Disjunction
};

struct DeductionReport {
  std::vector<StepJustification> steps;

  bool valid() const noexcept;
  std::optional<std::size_t> first_invalid() const noexcept;
  // One line per step: "i  <class>  <clause> [H]".
  std::string to_text(const Deduction& d) const;
};

// Clauses are tried in the order InBase, Conjunction, Disjunction,
// BaseEntailed, InExtension. For (c)/(d) the reported H is the one with
// the largest prime product, as in induce_interpretation.
DeductionReport check_deduction(const Deduction& d, const DeductionLimits& limits = {});

// Every nonempty H within {1..u-1} whose conjunction or disjunction equals
// or entails step u, sorted lexicographically. Throws ResourceLimit when
// u-1 exceeds limits.max_steps.
std::vector<IndexSet> omega(const Deduction& d, std::size_t u, const DeductionLimits& limits = {});

// The j-th prime, 1-based: nth_prime(1) == 2.
std::uint64_t nth_prime(std::size_t j);

// Product of nth_prime(h) over h in H. Throws EmptyList on an empty set.
BigInt gamma(const IndexSet& h);

// A reading of each step: an empty IndexSet stands for 0 (premise).
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::vector<IndexSet> readings) : readings_(std::move(readings)) {}

  std::size_t size() const noexcept { return readings_.size(); }
  bool is_premise(std::size_t i) const { return readings_.at(i - 1).empty(); }
  const IndexSet& indices(std::size_t i) const { return readings_.at(i - 1); }
  const std::vector<IndexSet>& readings() const noexcept { return readings_; }

  // Lines "i: 0" or "i: {h1,h2,...}".
  std::string to_text() const;
  static Interpretation from_text(std::string_view text);

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  std::vector<IndexSet> readings_;
};

// Depth-first from the last step: a visited step with empty omega reads 0,
// otherwise it takes the H of greatest gamma and its members are visited
// next (each index at most once). Unvisited steps read 0.
// Throws InvalidDeduction when check_deduction fails.
Interpretation induce_interpretation(const Deduction& d, const DeductionLimits& limits = {});

// Premise readings must be members of the extension; index readings need
// H nonempty, strictly earlier, and a conjunction or disjunction over H
// that equals or entails the step.
bool validate_interpretation(const Deduction& d, const Interpretation& phi);

// A rule schema over two metavariables a, b: premises(a,b) |- conclusion(a,b).
struct InferenceRule {
  std::string name;
  std::function<std::vector<PropClass>(const PropClass&, const PropClass&)> premises;
  std::function<PropClass(const PropClass&, const PropClass&)> conclusion;
};

// Modus ponens, the two and-eliminations, the two or-introductions,
// {a,b} |- b|a, disjunctive syllogism, modus tollens, and both
// double-negation rules.
std::vector<InferenceRule> classical_rules();

// Semantic validity of each rule over every instantiation of a, b by
// classes on atom_budget atoms (atom_budget <= 3, else ResourceLimit).
LawReport classical_rules_report(std::size_t atom_budget,
                                 std::span<const InferenceRule> rules);
LawReport classical_rules_report(std::size_t atom_budget);

}  // namespace prooflab
