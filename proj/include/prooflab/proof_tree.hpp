#pragma once

#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prooflab/deduction.hpp"
#include "prooflab/prop_class.hpp"

namespace prooflab {

class ProofNode;

// Either the premise marker or a nonempty set of child proofs. Children
// are kept sorted by canonical serialization with duplicates removed, so
// two justifications are equal iff their texts are equal.
class Justification {
 public:
  static Justification premise();
  // Throws std::invalid_argument on an empty list.
  static Justification of(std::vector<ProofNode> children);

  bool is_premise() const noexcept { return !children_; }
  std::span<const ProofNode> children() const noexcept;

  // "{0}" or "{child,child,...}".
  const std::string& text() const noexcept { return *text_; }

  friend bool operator==(const Justification& a, const Justification& b) {
    return a.text() == b.text();
  }

 private:
  Justification() = default;

  std::shared_ptr<const std::vector<ProofNode>> children_;
  std::shared_ptr<const std::string> text_;
};

// A proof: a conclusion class with its justification. Immutable; copies
// share structure.
class ProofNode {
 public:
  ProofNode(PropClass conclusion, Justification justification);

  static ProofNode premise(PropClass conclusion) {
    return ProofNode(std::move(conclusion), Justification::premise());
  }
  static ProofNode derived(PropClass conclusion, std::vector<ProofNode> children) {
    return ProofNode(std::move(conclusion), Justification::of(std::move(children)));
  }

  const PropClass& conclusion() const noexcept { return impl_->conclusion; }
  const Justification& justification() const noexcept { return impl_->justification; }
  bool is_premise() const noexcept { return impl_->justification.is_premise(); }
  std::span<const ProofNode> children() const noexcept { return impl_->justification.children(); }

  // "{" class-text "," justification-text "}"
  const std::string& serialized() const noexcept { return impl_->text; }

  friend bool operator==(const ProofNode& a, const ProofNode& b) {
    return a.impl_ == b.impl_ || a.serialized() == b.serialized();
  }
  friend bool operator<(const ProofNode& a, const ProofNode& b) {
    return a.serialized() < b.serialized();
  }

 private:
  struct Impl {
    PropClass conclusion;
    Justification justification;
    std::string text;
  };
  std::shared_ptr<const Impl> impl_;
};

std::string canonical_serialize(const ProofNode& r);

// Parses the canonical form. Children may appear in any order and with
// repeats; the result is canonical. Throws SyntaxError.
ProofNode parse_proof(std::string_view text);

// SHA-256 of the canonical serialization.
class ProofDigest {
 public:
  static ProofDigest of(const ProofNode& r);

  const std::string& hex() const noexcept { return hex_; }
  friend bool operator==(const ProofDigest&, const ProofDigest&) = default;
  friend auto operator<=>(const ProofDigest&, const ProofDigest&) = default;

 private:
  std::string hex_;
};

inline ProofDigest digest(const ProofNode& r) { return ProofDigest::of(r); }

// Tautology-concluded nodes, at any depth, become premises. Idempotent.
ProofNode normalize(const ProofNode& r);

// Structural recursion over the interpretation: premise readings give
// premise nodes, an index set H gives the set of the proofs of the steps in
// H. The result is normalized. Throws InvalidInterpretation when
// validate_interpretation fails.
ProofNode build_proof(const Deduction& d, const Interpretation& phi);

bool proof_eq(const ProofNode& a, const ProofNode& b);
bool essentially_equal(const Deduction& d1, const Interpretation& phi1, const Deduction& d2,
                       const Interpretation& phi2);

// Conclusions of all premise nodes.
std::set<PropClass> premises(const ProofNode& r);
// premises(a) is a strict subset of premises(b).
bool less_forced(const ProofNode& a, const ProofNode& b);

// Every conclusion in the tree, preorder.
std::vector<PropClass> conclusions(const ProofNode& r);

// Indented rendering; each conclusion shown as its DNF representative.
std::string pretty_print(const ProofNode& r);

}  // namespace prooflab
