#pragma once

// Brute-force reference implementations used by the tests. They work on
// Formula values through eval() and explicit valuation enumeration, and
// never touch PropClass tables, so they stay independent of the code under
// test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "prooflab/formula.hpp"

namespace prooflab::oracle {

inline std::vector<std::string> union_atoms(const std::vector<Formula>& fs) {
  std::set<std::string> names;
  for (const auto& f : fs) {
    for (auto& a : atoms(f)) names.insert(a);
  }
  return {names.begin(), names.end()};
}

// Calls fn(valuation) for each of the 2^n assignments to names.
template <typename Fn>
void for_each_valuation(const std::vector<std::string>& names, Fn fn) {
  const std::uint64_t rows = std::uint64_t{1} << names.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    Valuation v(false);
    for (std::size_t k = 0; k < names.size(); ++k) v.set(names[k], (row >> k) & 1u);
    fn(v);
  }
}

inline bool equivalent(const Formula& a, const Formula& b) {
  bool same = true;
  for_each_valuation(union_atoms({a, b}), [&](const Valuation& v) {
    same = same && eval(a, v) == eval(b, v);
  });
  return same;
}

inline bool entails(const Formula& a, const Formula& b) {
  bool ok = true;
  for_each_valuation(union_atoms({a, b}), [&](const Valuation& v) {
    ok = ok && (!eval(a, v) || eval(b, v));
  });
  return ok;
}

inline bool tautology(const Formula& a) {
  bool ok = true;
  for_each_valuation(atoms(a), [&](const Valuation& v) { ok = ok && eval(a, v); });
  return ok;
}

// Essential atoms of f: those for which flipping the atom changes the value
// under some valuation.
inline std::vector<std::string> essential_atoms(const Formula& f) {
  std::vector<std::string> out;
  const auto names = atoms(f);
  for (const auto& name : names) {
    bool essential = false;
    for_each_valuation(names, [&](const Valuation& v) {
      Valuation flipped = v;
      flipped.set(name, !v(name));
      essential = essential || eval(f, v) != eval(f, flipped);
    });
    if (essential) out.push_back(name);
  }
  return out;
}

inline Formula fold_and(const std::vector<Formula>& fs) {
  Formula acc = fs.at(0);
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conjunction(acc, fs[i]);
  return acc;
}

inline Formula fold_or(const std::vector<Formula>& fs) {
  Formula acc = fs.at(0);
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::disjunction(acc, fs[i]);
  return acc;
}

// All nonempty H in {1..u-1} (1-based) whose conjunction or disjunction
// entails step u, by direct enumeration of all 2^(u-1) - 1 subsets.
inline std::vector<std::vector<std::size_t>> omega(const std::vector<Formula>& steps, std::size_t u) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t prior = u - 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << prior); ++mask) {
    std::vector<std::size_t> h;
    std::vector<Formula> chosen;
    for (std::size_t k = 0; k < prior; ++k) {
      if ((mask >> k) & 1u) {
        h.push_back(k + 1);
        chosen.push_back(steps[k]);
      }
    }
    const Formula& goal = steps[u - 1];
    if (entails(fold_and(chosen), goal) || entails(fold_or(chosen), goal)) out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Per-step verdict of the deduction clauses over the extension given by
// witness: member, or justified by some H of earlier steps.
inline std::vector<bool> step_verdicts(const std::vector<Formula>& steps, const Valuation& witness) {
  std::vector<bool> out;
  for (std::size_t u = 1; u <= steps.size(); ++u) {
    out.push_back(eval(steps[u - 1], witness) || !omega(steps, u).empty());
  }
  return out;
}

inline std::uint64_t nth_prime_trial_division(std::size_t j) {
  std::size_t count = 0;
  for (std::uint64_t n = 2;; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime && ++count == j) return n;
  }
}

}  // namespace prooflab::oracle
