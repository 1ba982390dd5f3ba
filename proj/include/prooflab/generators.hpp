#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "prooflab/deduction.hpp"
#include "prooflab/formula.hpp"
#include "prooflab/proof_tree.hpp"
#include "prooflab/sigma_prime.hpp"

namespace prooflab {

// Seeded source for the sample generators. Bounded draws avoid the
// standard distributions so sequences are identical across standard
// libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

std::vector<std::string> atom_names(std::size_t count);  // p, q, r, s, then a4, a5, ...

Formula random_formula(Rng& rng, std::span<const std::string> atom_pool, std::size_t max_depth);

// A member class of sp drawn by rejection; falls back to the tautology.
PropClass random_member(Rng& rng, const SigmaPrime& sp, std::span<const std::string> atom_pool,
                        std::size_t max_depth = 3);

// A normalized proof whose conclusions are all members of sp. A derived
// node's conclusion is entailed by the conjunction of its children's.
ProofNode random_proof(Rng& rng, const SigmaPrime& sp, std::span<const std::string> atom_pool,
                       std::size_t max_depth = 2, std::size_t max_children = 3);

struct GeneratedDeduction {
  std::vector<Formula> formulas;  // step i is canonicalize(formulas[i-1])
  Deduction deduction;
};

// Every step is either a member premise or a conjunction/disjunction of
// earlier steps, optionally weakened by a disjunct; valid by construction.
GeneratedDeduction random_valid_deduction(Rng& rng, const SigmaPrime& sp,
                                          std::span<const std::string> atom_pool,
                                          std::size_t max_steps);

}  // namespace prooflab
