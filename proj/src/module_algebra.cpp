#include "prooflab/module_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "prooflab/error.hpp"

namespace prooflab {
namespace {

void require_member(const SigmaPrime& sp, const PropClass& c, const char* what) {
  if (!sp.contains(c)) {
    throw Error(ErrorKind::NotMember, std::string(what) + " " + c.text() +
                                          " is not in the extension (witness " +
                                          sp.witness().to_string() + ")");
  }
}

}  // namespace

Justification delta_merge(const Justification& d1, const Justification& d2, const PropClass& alpha,
                          const PropClass& z1, const PropClass& z2) {
  if (d1 == d2) return alpha.is_tautology() ? Justification::premise() : d1;
  if (d1.is_premise()) return d2;
  if (d2.is_premise()) return d1;

  const auto c1 = d1.children();
  const auto c2 = d2.children();
  std::vector<ProofNode> diff;
  std::set_symmetric_difference(c1.begin(), c1.end(), c2.begin(), c2.end(),
                                std::back_inserter(diff));
  if (diff.empty()) throw std::logic_error("delta_merge: distinct child sets with empty difference");

  std::vector<PropClass> concl;
  concl.reserve(diff.size());
  for (const auto& node : diff) concl.push_back(node.conclusion());
  const PropClass both = class_and(z1, z2);
  if (!entails(big_and(concl), both)) return Justification::premise();
  if (!entails(both, class_iff(z1, z2))) {
    throw std::logic_error("delta_merge: z1 & z2 does not entail z1 <-> z2");
  }
  return Justification::of(std::move(diff));
}

ProofNode sum(const ProofNode& r1, const ProofNode& r2, const SigmaPrime& sp) {
  require_member(sp, r1.conclusion(), "sum operand");
  require_member(sp, r2.conclusion(), "sum operand");
  const PropClass& z1 = r1.conclusion();
  const PropClass& z2 = r2.conclusion();
  PropClass alpha = class_iff(z1, z2);
  Justification just = delta_merge(r1.justification(), r2.justification(), alpha, z1, z2);
  return normalize(ProofNode(std::move(alpha), std::move(just)));
}

ProofNode scalar_mul(const Scalar& s, const ProofNode& r, const SigmaPrime& sp) {
  require_member(sp, r.conclusion(), "proof conclusion");
  if (s.is_one()) return normalize(r);
  require_member(sp, s.value(), "scalar");
  return normalize(ProofNode(class_or(s.value(), r.conclusion()), r.justification()));
}

ProofNode neutral_proof(const SigmaPrime&) { return ProofNode::premise(PropClass::tautology()); }

ProofNode embed_premise(const SigmaPrime& sp, const PropClass& c) {
  require_member(sp, c, "class");
  return ProofNode::premise(c);
}

namespace module_law {

bool sum_commutes(const SigmaPrime& sp, const ProofNode& r1, const ProofNode& r2) {
  return proof_eq(sum(r1, r2, sp), sum(r2, r1, sp));
}

bool sum_neutral(const SigmaPrime& sp, const ProofNode& r) {
  const ProofNode zero = neutral_proof(sp);
  const ProofNode expected = normalize(r);
  return proof_eq(sum(r, zero, sp), expected) && proof_eq(sum(zero, r, sp), expected);
}

bool sum_involution(const SigmaPrime& sp, const ProofNode& r) {
  return proof_eq(sum(r, r, sp), neutral_proof(sp));
}

bool sum_associates(const SigmaPrime& sp, const ProofNode& r1, const ProofNode& r2,
                    const ProofNode& r3) {
  return proof_eq(sum(sum(r1, r2, sp), r3, sp), sum(r1, sum(r2, r3, sp), sp));
}

bool scalar_compat(const SigmaPrime& sp, const Scalar& t, const Scalar& b, const ProofNode& r) {
  return proof_eq(scalar_mul(scalar_product(t, b), r, sp),
                  scalar_mul(t, scalar_mul(b, r, sp), sp));
}

bool scalar_identity(const SigmaPrime& sp, const ProofNode& r) {
  return proof_eq(scalar_mul(Scalar::one(), r, sp), normalize(r));
}

bool scalar_distributes_sum(const SigmaPrime& sp, const Scalar& a, const ProofNode& r1,
                            const ProofNode& r2) {
  return proof_eq(scalar_mul(a, sum(r1, r2, sp), sp),
                  sum(scalar_mul(a, r1, sp), scalar_mul(a, r2, sp), sp));
}

bool scalar_distributes_ring(const SigmaPrime& sp, const Scalar& a, const Scalar& b,
                             const ProofNode& r) {
  const Scalar ab = Scalar::of(ring_add(sp, a.value(), b.value()));
  return proof_eq(scalar_mul(ab, r, sp), sum(scalar_mul(a, r, sp), scalar_mul(b, r, sp), sp));
}

bool sum_closed(const SigmaPrime& sp, const ProofNode& r1, const ProofNode& r2) {
  const ProofNode s = sum(r1, r2, sp);
  if (!sp.contains(s.conclusion())) return false;
  auto from_operand = [&](const ProofNode& child) {
    auto in = [&](const ProofNode& r) {
      const auto c = r.children();
      return std::binary_search(c.begin(), c.end(), child);
    };
    return in(r1) || in(r2);
  };
  const auto children = s.children();
  return std::all_of(children.begin(), children.end(), from_operand);
}

bool scalar_closed(const SigmaPrime& sp, const Scalar& s, const ProofNode& r) {
  return sp.contains(scalar_mul(s, r, sp).conclusion());
}

bool distrib_sum_covered(const Scalar& a, const ProofNode& r1, const ProofNode& r2) {
  if (r1.justification() == r2.justification()) return true;
  auto keeps_justification = [&](const ProofNode& r) {
    return a.is_one() || r.is_premise() || !class_or(a.value(), r.conclusion()).is_tautology();
  };
  return (r1.is_premise() && keeps_justification(r2)) ||
         (r2.is_premise() && keeps_justification(r1));
}

}  // namespace module_law

namespace {

std::string short_digest(const ProofNode& r) { return digest(r).hex().substr(0, 12); }

std::string instance(std::initializer_list<const ProofNode*> proofs,
                     std::initializer_list<const Scalar*> scalars = {}) {
  std::string out;
  for (const Scalar* s : scalars) out += (out.empty() ? "" : " ") + s->text();
  for (const ProofNode* r : proofs) out += (out.empty() ? "" : " ") + short_digest(*r);
  return out;
}

}  // namespace

LawReport check_module_axioms(const SigmaPrime& sp, std::span<const Scalar> scalars,
                              std::span<const ProofNode> proofs,
                              const ModuleAuditOptions& options) {
  for (const auto& s : scalars) {
    if (!s.is_one()) require_member(sp, s.value(), "scalar");
  }
  for (const auto& r : proofs) require_member(sp, r.conclusion(), "proof conclusion");

  using namespace module_law;
  LawReport report;
  auto& commutative = report.law(kCommutative);
  auto& neutral = report.law(kNeutral);
  auto& involution = report.law(kInvolution);
  auto& sum_closure = report.law(kSumClosure);
  auto& associative = report.law(kAssociative, /*diagnostic=*/true);
  auto& compat = report.law(kScalarCompat);
  auto& identity = report.law(kScalarIdentity);
  auto& distrib_covered = report.law(kDistribSumCovered);
  auto& distrib_general = report.law(kDistribSumGeneral, /*diagnostic=*/true);
  auto& distrib_ring = report.law(kDistribRing);
  auto& scalar_closure = report.law(kScalarClosure);

  for (std::size_t i = 0; i < proofs.size(); ++i) {
    const auto& r = proofs[i];
    neutral.record(sum_neutral(sp, r), instance({&r}));
    involution.record(sum_involution(sp, r), instance({&r}));
    identity.record(scalar_identity(sp, r), instance({&r}));
    for (std::size_t j = i; j < proofs.size(); ++j) {
      const auto& q = proofs[j];
      commutative.record(sum_commutes(sp, r, q), instance({&r, &q}));
      sum_closure.record(sum_closed(sp, r, q), instance({&r, &q}));
    }
  }

  if (proofs.size() <= options.associativity_pool_limit) {
    for (const auto& a : proofs) {
      for (const auto& b : proofs) {
        for (const auto& c : proofs) {
          associative.record(sum_associates(sp, a, b, c), instance({&a, &b, &c}));
        }
      }
    }
  }

  for (const auto& s : scalars) {
    for (const auto& r : proofs) {
      scalar_closure.record(scalar_closed(sp, s, r), instance({&r}, {&s}));
      for (const auto& t : scalars) {
        compat.record(scalar_compat(sp, s, t, r), instance({&r}, {&s, &t}));
        if (!s.is_one() && !t.is_one()) {
          distrib_ring.record(scalar_distributes_ring(sp, s, t, r), instance({&r}, {&s, &t}));
        }
      }
      for (const auto& q : proofs) {
        auto& tally = distrib_sum_covered(s, r, q) ? distrib_covered : distrib_general;
        tally.record(scalar_distributes_sum(sp, s, r, q), instance({&r, &q}, {&s}));
      }
    }
  }
  return report;
}

}  // namespace prooflab
