#pragma once

#include <functional>
#include <span>
#include <vector>

#include "prooflab/law_report.hpp"
#include "prooflab/prop_class.hpp"

namespace prooflab {

// A maximal consistent extension of a finite premise set, presented by a
// total valuation: a class belongs to the extension iff the witness makes
// it true. The extension is deductively closed and maximal by construction.
class SigmaPrime {
 public:
  const std::vector<PropClass>& base() const noexcept { return base_; }
  const Valuation& witness() const noexcept { return witness_; }
  bool default_bit() const noexcept { return witness_.default_bit(); }

  bool contains(const PropClass& c) const { return c.evaluate(witness_); }

 private:
  friend SigmaPrime lindenbaum_extend(std::vector<PropClass>, bool, std::size_t);
  SigmaPrime(std::vector<PropClass> base, Valuation witness)
      : base_(std::move(base)), witness_(std::move(witness)) {}

  std::vector<PropClass> base_;
  Valuation witness_;
};

// Witness: the lexicographically smallest assignment (atoms in name order,
// 0 < 1) over the union of the supports that satisfies every member of
// sigma; every other atom takes default_bit. Throws Inconsistent when no
// such assignment exists.
SigmaPrime lindenbaum_extend(std::vector<PropClass> sigma, bool default_bit,
                             std::size_t atom_cap = kDefaultAtomCap);

bool member(const SigmaPrime& sp, const PropClass& c);

// The additive operation: a <-> b. Throws NotMember unless both operands
// belong to sp.
PropClass ring_add(const SigmaPrime& sp, const PropClass& a, const PropClass& b);
// The multiplicative operation: a | b.
PropClass ring_mul(const SigmaPrime& sp, const PropClass& a, const PropClass& b);

// Either a member class of the extension or the formal identity adjoined
// to the disjunction monoid.
class Scalar {
 public:
  static Scalar one() { return Scalar(); }
  static Scalar of(PropClass c) { return Scalar(std::move(c)); }

  bool is_one() const noexcept { return is_one_; }
  // Throws std::logic_error on the formal identity.
  const PropClass& value() const;

  // "e" for the identity, the class text otherwise.
  std::string text() const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  Scalar() = default;
  explicit Scalar(PropClass c) : is_one_(false), value_(std::move(c)) {}

  bool is_one_ = true;
  PropClass value_;
};

// Product of scalars: the identity is neutral, classes combine with |.
Scalar scalar_product(const Scalar& a, const Scalar& b);

// s | c, with the identity acting as s | c = c.
PropClass scalar_or(const SigmaPrime& sp, const Scalar& s, const PropClass& c);

struct RingOps {
  std::function<PropClass(const PropClass&, const PropClass&)> add;
  std::function<PropClass(const PropClass&, const PropClass&)> mul;
};

// <->, | on classes.
RingOps standard_ring_ops();

// Commutative-ring laws over the given elements using ops: add
// commutativity/associativity, tautology neutrality, self-inverse, mul
// commutativity/associativity/idempotence, distributivity of mul over add.
// Closure laws are tallied only when closure_context is non-null.
LawReport check_ring_laws(std::span<const PropClass> elements, const RingOps& ops,
                          const SigmaPrime* closure_context = nullptr);

// check_ring_laws with the standard operations and closure under sp.
// Throws NotMember if any element lies outside sp.
LawReport check_ring_axioms(const SigmaPrime& sp, std::span<const PropClass> elements);

}  // namespace prooflab
