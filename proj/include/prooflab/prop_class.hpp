#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prooflab/formula.hpp"

namespace prooflab {

inline constexpr std::size_t kDefaultAtomCap = 16;

// An equivalence class of formulas under "agree on every valuation",
// stored as a truth table over its essential atoms only. Two formulas are
// equivalent iff their classes compare equal.
//
// Table order is binary counting over the support with the first
// (lexicographically smallest) atom as the most significant bit.
class PropClass {
 public:
  // The contradiction class.
  PropClass() : table_{false} {}

  static PropClass constant(bool value);
  static PropClass tautology() { return constant(true); }
  static PropClass contradiction() { return constant(false); }
  static PropClass atom(std::string name);

  // support must be sorted and distinct; table must have 2^|support|
  // entries. Inessential atoms are projected out.
  static PropClass from_table(std::vector<std::string> support, std::vector<bool> table,
                              std::size_t atom_cap = kDefaultAtomCap);

  // Inverse of text(). Rejects non-canonical input (unsorted support,
  // inessential atoms, wrong table length).
  static PropClass from_text(std::string_view text);

  const std::vector<std::string>& support() const noexcept { return support_; }
  const std::vector<bool>& table() const noexcept { return table_; }

  bool evaluate(const Valuation& v) const;
  bool is_tautology() const noexcept { return support_.empty() && table_[0]; }
  bool is_contradiction() const noexcept { return support_.empty() && !table_[0]; }

  // "[p,q;0001]"; tautology "[;1]", contradiction "[;0]".
  std::string text() const;

  friend bool operator==(const PropClass& a, const PropClass& b) = default;
  friend bool operator<(const PropClass& a, const PropClass& b) {
    if (a.support_ != b.support_) return a.support_ < b.support_;
    return a.table_ < b.table_;
  }

 private:
  std::vector<std::string> support_;
  std::vector<bool> table_;
};

PropClass canonicalize(const Formula& f, std::size_t atom_cap = kDefaultAtomCap);

PropClass class_not(const PropClass& a);
PropClass class_and(const PropClass& a, const PropClass& b, std::size_t atom_cap = kDefaultAtomCap);
PropClass class_or(const PropClass& a, const PropClass& b, std::size_t atom_cap = kDefaultAtomCap);
// (~a | b) & (~b | a)
PropClass class_iff(const PropClass& a, const PropClass& b, std::size_t atom_cap = kDefaultAtomCap);
// Throw EmptyList on an empty span.
PropClass big_and(std::span<const PropClass> items, std::size_t atom_cap = kDefaultAtomCap);
PropClass big_or(std::span<const PropClass> items, std::size_t atom_cap = kDefaultAtomCap);

// a <= b in the Boolean order: every assignment satisfying a satisfies b.
bool entails(const PropClass& a, const PropClass& b);

inline bool is_tautology(const PropClass& a) noexcept { return a.is_tautology(); }

// A formula in the class: full disjunctive normal form over the support.
// The constants use the fixed atom "t" ("t | ~t" and "t & ~t").
Formula representative(const PropClass& c);

// Every class whose support is a subset of atom_names (2^(2^k) of them,
// k <= 4), ordered by table index over the full atom list.
std::vector<PropClass> all_classes(const std::vector<std::string>& atom_names);

}  // namespace prooflab
