#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prooflab/proof_tree.hpp"
#include "prooflab/sigma_prime.hpp"

namespace prooflab {

// Child digests (hex, possibly abbreviated to a unique prefix) from the
// root down to a target node. The empty path addresses the root.
struct ProofPath {
  std::vector<std::string> steps;

  std::size_t depth() const noexcept { return steps.size(); }

  // Slash-joined digest prefixes of the given length; the root is "/".
  std::string text(std::size_t prefix = 12) const;
  static ProofPath parse(std::string_view text);

  friend bool operator==(const ProofPath&, const ProofPath&) = default;
};

// All paths to nodes concluding sigma, shallower first, ties broken by
// path text. Paths carry full digests.
std::vector<ProofPath> find_occurrences(const ProofNode& r, const PropClass& sigma);

// The node a path addresses. Throws BadPath when a step matches no child
// or more than one.
ProofNode extract_subproof(const ProofNode& r, const ProofPath& path);

// Gives every sigma-node of target (or only the one at single_path) the
// justification of the first non-premise sigma-node of donor. Ancestors
// are rebuilt and the result is normalized.
// Throws NotFound (sigma absent from target or donor), PremiseDonor (every
// donor occurrence is a bare premise), NotMember (a donor conclusion lies
// outside sp), BadPath.
ProofNode replace_subproof(const ProofNode& target, const PropClass& sigma, const ProofNode& donor,
                           const SigmaPrime& sp,
                           const std::optional<ProofPath>& single_path = std::nullopt);

// Turns every sigma-node (or only the one at single_path) into a premise.
// Throws NotFound, BadPath.
ProofNode eliminate_subproof(const ProofNode& r, const PropClass& sigma,
                             const std::optional<ProofPath>& single_path = std::nullopt);

}  // namespace prooflab
