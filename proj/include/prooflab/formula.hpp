#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace prooflab {

// Immutable propositional formula over the connectives ~, &, |.
// Nodes are shared, so copies are cheap.
class Formula {
 public:
  enum class Kind : std::uint8_t { Atom, Not, And, Or };

  // Throws SyntaxError if name does not match [a-z][a-z0-9_]*.
  static Formula atom(std::string name);
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  // (~a | b) & (~b | a); the AST has no dedicated biconditional node.
  static Formula biconditional(const Formula& a, const Formula& b);

  Kind kind() const noexcept;
  const std::string& name() const;   // Atom only
  const Formula& child() const;      // Not only
  const Formula& left() const;       // And / Or only
  const Formula& right() const;      // And / Or only

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

bool is_atom_name(std::string_view name) noexcept;

// Explicit atom bits plus a default for every atom not listed.
class Valuation {
 public:
  explicit Valuation(bool default_bit = false) : default_bit_(default_bit) {}
  Valuation(std::map<std::string, bool, std::less<>> bits, bool default_bit)
      : bits_(std::move(bits)), default_bit_(default_bit) {}

  bool operator()(std::string_view atom) const;
  void set(std::string atom, bool bit) { bits_[std::move(atom)] = bit; }

  const std::map<std::string, bool, std::less<>>& explicit_bits() const noexcept {
    return bits_;
  }
  bool default_bit() const noexcept { return default_bit_; }

  // "p=1,q=0 default=0"
  std::string to_string() const;

 private:
  std::map<std::string, bool, std::less<>> bits_;
  bool default_bit_;
};

// Grammar (whitespace insignificant):
//   formula := iff ; iff := or ("<->" or)* ; or := and ("|" and)* ;
//   and := unary ("&" unary)* ; unary := "~" unary | atom | "(" formula ")"
// Binary operators are left-associative.
Formula parse(std::string_view text);

// Minimal parentheses, left-associative: Or(Or(p,q),r) renders as
// "p | q | r" while Or(p,Or(q,r)) renders as "p | (q | r)".
std::string render(const Formula& f);

bool eval(const Formula& f, const Valuation& v);

// Connective nesting depth: atoms are level 0.
std::size_t level(const Formula& f);

// Distinct atom names occurring in f, sorted lexicographically.
std::vector<std::string> atoms(const Formula& f);

}  // namespace prooflab
