#include "prooflab/generators.hpp"

namespace prooflab {

std::vector<std::string> atom_names(std::size_t count) {
  static const char* const kFirst[] = {"p", "q", "r", "s"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(i < 4 ? kFirst[i] : "a" + std::to_string(i));
  }
  return out;
}

Formula random_formula(Rng& rng, std::span<const std::string> atom_pool, std::size_t max_depth) {
  if (max_depth == 0 || rng.below(4) == 0) {
    return Formula::atom(atom_pool[rng.below(atom_pool.size())]);
  }
  switch (rng.below(3)) {
    case 0: return Formula::negation(random_formula(rng, atom_pool, max_depth - 1));
    case 1:
      return Formula::conjunction(random_formula(rng, atom_pool, max_depth - 1),
                                  random_formula(rng, atom_pool, max_depth - 1));
    default:
      return Formula::disjunction(random_formula(rng, atom_pool, max_depth - 1),
                                  random_formula(rng, atom_pool, max_depth - 1));
  }
}

namespace {

Formula random_member_formula(Rng& rng, const SigmaPrime& sp,
                              std::span<const std::string> atom_pool, std::size_t max_depth) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Formula f = random_formula(rng, atom_pool, max_depth);
    if (eval(f, sp.witness())) return f;
  }
  Formula a = Formula::atom(atom_pool.front());
  return Formula::disjunction(a, Formula::negation(a));
}

}  // namespace

PropClass random_member(Rng& rng, const SigmaPrime& sp, std::span<const std::string> atom_pool,
                        std::size_t max_depth) {
  return canonicalize(random_member_formula(rng, sp, atom_pool, max_depth));
}

ProofNode random_proof(Rng& rng, const SigmaPrime& sp, std::span<const std::string> atom_pool,
                       std::size_t max_depth, std::size_t max_children) {
  if (max_depth == 0 || max_children == 0 || rng.below(3) == 0) {
    return normalize(ProofNode::premise(random_member(rng, sp, atom_pool)));
  }
  std::vector<ProofNode> children;
  const std::size_t count = 1 + rng.below(max_children);
  std::vector<PropClass> premises;
  for (std::size_t i = 0; i < count; ++i) {
    children.push_back(random_proof(rng, sp, atom_pool, max_depth - 1, max_children));
    premises.push_back(children.back().conclusion());
  }
  PropClass conclusion = big_and(premises);
  if (rng.coin()) conclusion = class_or(conclusion, random_member(rng, sp, atom_pool));
  return normalize(ProofNode::derived(std::move(conclusion), std::move(children)));
}

GeneratedDeduction random_valid_deduction(Rng& rng, const SigmaPrime& sp,
                                          std::span<const std::string> atom_pool,
                                          std::size_t max_steps) {
  const std::size_t n = 1 + rng.below(max_steps);
  std::vector<Formula> formulas;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || rng.below(3) == 0) {
      formulas.push_back(random_member_formula(rng, sp, atom_pool, 2));
      continue;
    }
    // A random nonempty subset of the earlier steps.
    std::vector<std::size_t> chosen;
    while (chosen.empty()) {
      for (std::size_t h = 0; h < i; ++h) {
        if (rng.below(3) == 0) chosen.push_back(h);
      }
    }
    const bool conjoin = rng.coin();
    Formula f = formulas[chosen[0]];
    for (std::size_t k = 1; k < chosen.size(); ++k) {
      f = conjoin ? Formula::conjunction(f, formulas[chosen[k]])
                  : Formula::disjunction(f, formulas[chosen[k]]);
    }
    if (rng.coin()) f = Formula::disjunction(f, random_formula(rng, atom_pool, 1));
    formulas.push_back(f);
  }
  std::vector<PropClass> steps;
  for (const auto& f : formulas) steps.push_back(canonicalize(f));
  return {std::move(formulas), Deduction(std::move(steps), sp)};
}

}  // namespace prooflab
