#include <doctest.h>

#include <functional>
#include <vector>

#include "prooflab/error.hpp"
#include "prooflab/generators.hpp"
#include "prooflab/subproof.hpp"

using namespace prooflab;

namespace {

PropClass C(const char* text) { return canonicalize(parse(text)); }

SigmaPrime extend(std::vector<const char*> texts) {
  std::vector<PropClass> sigma;
  for (auto t : texts) sigma.push_back(C(t));
  return lindenbaum_extend(std::move(sigma), false);
}

ProofNode P(const char* text) { return ProofNode::premise(C(text)); }
ProofNode N(const char* text, std::vector<ProofNode> children) {
  return ProofNode::derived(C(text), std::move(children));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

// Every node reachable from the root, with its depth, by plain recursion.
void walk(const ProofNode& r, const PropClass& sigma, std::size_t depth, std::vector<std::size_t>& hits) {
  if (r.conclusion() == sigma) hits.push_back(depth);
  for (const auto& c : r.children()) walk(c, sigma, depth + 1, hits);
}

}  // namespace

TEST_CASE("find_occurrences examples") {
  const ProofNode r = N("p | q", {P("p")});
  const auto one = find_occurrences(r, C("p"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].depth() == 1);
  CHECK(one[0].steps[0] == digest(P("p")).hex());
  CHECK(find_occurrences(r, C("q")).empty());
  CHECK(find_occurrences(r, C("p | q")) == std::vector<ProofPath>{ProofPath{}});

  const ProofNode twice = N("p | q", {N("p | s", {P("p")}), P("p")});
  const auto two = find_occurrences(twice, C("p"));
  REQUIRE(two.size() == 2);
  CHECK(two[0].depth() == 1);
  CHECK(two[1].depth() == 2);
  std::vector<std::size_t> hits;
  walk(twice, C("p"), 0, hits);
  CHECK(hits.size() == two.size());
}

TEST_CASE("find_occurrences agrees with a plain traversal") {
  const SigmaPrime sp = extend({"p", "q"});
  Rng rng(44);
  const auto pool = atom_names(2);
  for (int i = 0; i < 200; ++i) {
    const ProofNode r = random_proof(rng, sp, pool, 3, 3);
    for (const auto& sigma : conclusions(r)) {
      std::vector<std::size_t> hits;
      walk(r, sigma, 0, hits);
      const auto paths = find_occurrences(r, sigma);
      REQUIRE(paths.size() == hits.size());
      for (std::size_t k = 1; k < paths.size(); ++k) CHECK(paths[k - 1].depth() <= paths[k].depth());
      for (const auto& path : paths) CHECK(extract_subproof(r, path).conclusion() == sigma);
    }
  }
}

TEST_CASE("paths print as digest prefixes and parse back") {
  const ProofNode r = N("p | q", {N("p | s", {P("p")}), P("p")});
  const auto paths = find_occurrences(r, C("p"));
  const ProofPath& deep = paths[1];
  CHECK(ProofPath{}.text() == "/");
  CHECK(deep.text().size() == 12 + 1 + 12);
  CHECK(extract_subproof(r, ProofPath::parse(deep.text())) == P("p"));
  CHECK(ProofPath::parse("/").depth() == 0);
  CHECK(kind_of([] { ProofPath::parse("zz"); }) == ErrorKind::BadPath);
  CHECK(kind_of([] { ProofPath::parse("ab//cd"); }) == ErrorKind::BadPath);
}

TEST_CASE("extract_subproof examples") {
  const ProofNode r = N("p | q", {P("p")});
  CHECK(extract_subproof(r, ProofPath{}) == r);
  const auto path = find_occurrences(r, C("p"))[0];
  const ProofNode sub = extract_subproof(r, path);
  CHECK(sub == P("p"));
  CHECK(digest(sub).hex() == path.steps.back());
  CHECK(kind_of([&] { extract_subproof(r, ProofPath{{"0000"}}); }) == ErrorKind::BadPath);
  CHECK(kind_of([&] { extract_subproof(P("p"), path); }) == ErrorKind::BadPath);
}

TEST_CASE("replace_subproof examples") {
  const SigmaPrime sp = extend({"p", "s"});
  const ProofNode target = N("p | q", {P("p")});
  const ProofNode donor = N("p", {P("p & s")});
  const ProofNode replaced = replace_subproof(target, C("p"), donor, sp);
  CHECK(replaced == N("p | q", {N("p", {P("p & s")})}));

  CHECK(kind_of([&] { replace_subproof(target, C("p"), P("p"), sp); }) == ErrorKind::PremiseDonor);

  const ProofNode same = replace_subproof(replaced, C("p"), replaced, sp);
  CHECK(proof_eq(same, replaced));

  CHECK(kind_of([&] { replace_subproof(target, C("s"), N("s", {P("p & s")}), sp); }) ==
        ErrorKind::NotFound);
  CHECK(kind_of([&] { replace_subproof(target, C("p"), N("s", {P("p & s")}), sp); }) ==
        ErrorKind::NotFound);
  CHECK(kind_of([&] { replace_subproof(target, C("p"), N("p", {P("p & q")}), sp); }) ==
        ErrorKind::NotMember);
}

TEST_CASE("replace_subproof rewrites every site unless a path is given") {
  const SigmaPrime sp = extend({"p", "s"});
  const ProofNode target = N("p | q", {N("p | s", {P("p")}), P("p")});
  const ProofNode donor = N("p", {P("p & s")});
  const ProofNode all = replace_subproof(target, C("p"), donor, sp);
  CHECK(all == N("p | q", {N("p | s", {donor}), donor}));

  const auto paths = find_occurrences(target, C("p"));
  const ProofNode deep_only = replace_subproof(target, C("p"), donor, sp, paths[1]);
  CHECK(deep_only == N("p | q", {N("p | s", {donor}), P("p")}));
  CHECK(kind_of([&] { replace_subproof(target, C("p"), donor, sp, ProofPath{}); }) ==
        ErrorKind::BadPath);
}

TEST_CASE("eliminate_subproof examples") {
  const ProofNode r = N("p | q", {N("p", {P("p & s")})});
  const ProofNode out = eliminate_subproof(r, C("p"));
  CHECK(out == N("p | q", {P("p")}));
  CHECK(eliminate_subproof(out, C("p")) == out);
  CHECK(premises(out).count(C("p")) == 1);
  CHECK(premises(r).count(C("p")) == 0);
  CHECK(kind_of([&] { eliminate_subproof(r, C("q")); }) == ErrorKind::NotFound);
}

TEST_CASE("surgery properties on generated proofs") {
  const SigmaPrime sp = extend({"p", "q"});
  Rng rng(101);
  const auto pool = atom_names(3);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const ProofNode target = random_proof(rng, sp, pool, 3, 3);
    const ProofNode donor = random_proof(rng, sp, pool, 3, 3);
    for (const auto& sigma : conclusions(donor)) {
      if (find_occurrences(target, sigma).empty() || sigma.is_tautology()) continue;
      ProofNode replaced = target;
      try {
        replaced = replace_subproof(target, sigma, donor, sp);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PremiseDonor);
        continue;
      }
      ++checked;
      CHECK(replaced.conclusion() == target.conclusion());
      for (const auto& c : conclusions(replaced)) CHECK(member(sp, c));
      CHECK(proof_eq(eliminate_subproof(replaced, sigma), eliminate_subproof(target, sigma)));

      ProofNode donor_site = donor;
      for (const auto& path : find_occurrences(donor, sigma)) {
        donor_site = extract_subproof(donor, path);
        if (!donor_site.is_premise()) break;
      }
      const auto sites = find_occurrences(replaced, sigma);
      REQUIRE_FALSE(sites.empty());
      CHECK(proof_eq(extract_subproof(replaced, sites[0]), normalize(donor_site)));

      const ProofNode eliminated = eliminate_subproof(target, sigma);
      CHECK(eliminated.conclusion() == target.conclusion());
      CHECK(premises(eliminated).count(sigma) == 1);
    }
  }
  CHECK(checked > 50);
}
