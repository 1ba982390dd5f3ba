#pragma once

#include <span>

#include "prooflab/law_report.hpp"
#include "prooflab/proof_tree.hpp"
#include "prooflab/sigma_prime.hpp"

namespace prooflab {

// Merge of two justifications for the sum of proofs with conclusions z1,
// z2; alpha is the conclusion of the sum. Cases, first match wins:
//   1. d1 == d2 and alpha is a tautology       -> premise
//   2. d1 == d2                                -> d1
//   3. exactly one side is the premise marker  -> the other side
//   4. S = symmetric difference of the child sets; Children(S) when the
//      conjunction of S's conclusions entails z1 & z2, else premise.
Justification delta_merge(const Justification& d1, const Justification& d2, const PropClass& alpha,
                          const PropClass& z1, const PropClass& z2);

// {z1 <-> z2, delta_merge(...)}, normalized. Throws NotMember unless both
// conclusions belong to sp.
ProofNode sum(const ProofNode& r1, const ProofNode& r2, const SigmaPrime& sp);

// {s | z, same justification}, normalized; the formal identity returns
// normalize(r). Throws NotMember.
ProofNode scalar_mul(const Scalar& s, const ProofNode& r, const SigmaPrime& sp);

// {tautology, premise}: the additive neutral element.
ProofNode neutral_proof(const SigmaPrime& sp);

// {c, premise}. Throws NotMember.
ProofNode embed_premise(const SigmaPrime& sp, const PropClass& c);

// Single-instance checks of the module laws, and the names under which
// check_module_axioms tallies them. Each returns true when both sides are
// proof_eq.
namespace module_law {
inline constexpr const char* kCommutative = "sum commutative";
inline constexpr const char* kNeutral = "sum neutral";
inline constexpr const char* kInvolution = "sum involution (r + r = 0)";
inline constexpr const char* kAssociative = "sum associative";
inline constexpr const char* kScalarCompat = "(1) (t|b).r = t.(b.r)";
inline constexpr const char* kScalarIdentity = "(2) e.r = r";
inline constexpr const char* kDistribSumCovered =
    "(3) a.(r1+r2) = a.r1 + a.r2 [equal or premise operand]";
inline constexpr const char* kDistribSumGeneral = "(3) a.(r1+r2) = a.r1 + a.r2 [general]";
inline constexpr const char* kDistribRing = "(4) (a<->b).r = a.r + b.r";
inline constexpr const char* kSumClosure = "sum closure";
inline constexpr const char* kScalarClosure = "scalar closure";

bool sum_commutes(const SigmaPrime& sp, const ProofNode& r1, const ProofNode& r2);
// r + 0 = 0 + r = normalize(r)
bool sum_neutral(const SigmaPrime& sp, const ProofNode& r);
bool sum_involution(const SigmaPrime& sp, const ProofNode& r);
bool sum_associates(const SigmaPrime& sp, const ProofNode& r1, const ProofNode& r2,
                    const ProofNode& r3);
bool scalar_compat(const SigmaPrime& sp, const Scalar& t, const Scalar& b, const ProofNode& r);
bool scalar_identity(const SigmaPrime& sp, const ProofNode& r);
bool scalar_distributes_sum(const SigmaPrime& sp, const Scalar& a, const ProofNode& r1,
                            const ProofNode& r2);
// a and b must be class scalars.
bool scalar_distributes_ring(const SigmaPrime& sp, const Scalar& a, const Scalar& b,
                             const ProofNode& r);
// The sum's conclusions are members and its children come from the
// operands' child sets.
bool sum_closed(const SigmaPrime& sp, const ProofNode& r1, const ProofNode& r2);
bool scalar_closed(const SigmaPrime& sp, const Scalar& s, const ProofNode& r);

// Law (3) is proved for equal justifications, or for a premise operand
// whose partner keeps its justification after scaling by a. Scaling can turn
// the partner's conclusion into a tautology, and normalization then drops
// its justification, so the right side no longer carries the same Δ as the
// left. Such pairs, and all others, fall in the general case.
bool distrib_sum_covered(const Scalar& a, const ProofNode& r1, const ProofNode& r2);
}  // namespace module_law

struct ModuleAuditOptions {
  // Associativity is O(n^3) in the proof count; it is skipped when the
  // pool has more proofs than this.
  std::size_t associativity_pool_limit = 64;
};

// Audits the module laws over all pairs/triples drawn from the operands.
// Equalities are decided by proof_eq. Associativity and the general case of
// (3) are reported as diagnostics. Throws NotMember if an operand's
// conclusion (or a class scalar) lies outside sp.
LawReport check_module_axioms(const SigmaPrime& sp, std::span<const Scalar> scalars,
                              std::span<const ProofNode> proofs,
                              const ModuleAuditOptions& options = {});

}  // namespace prooflab
