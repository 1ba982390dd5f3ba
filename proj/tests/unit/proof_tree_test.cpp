#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "prooflab/error.hpp"
#include "prooflab/generators.hpp"
#include "prooflab/proof_tree.hpp"

using namespace prooflab;

namespace {

PropClass C(const char* text) { return canonicalize(parse(text)); }

SigmaPrime extend(std::vector<const char*> texts) {
  std::vector<PropClass> sigma;
  for (auto t : texts) sigma.push_back(C(t));
  return lindenbaum_extend(std::move(sigma), false);
}

Deduction D(std::vector<const char*> steps, const SigmaPrime& sp) {
  std::vector<PropClass> classes;
  for (auto s : steps) classes.push_back(C(s));
  return Deduction(std::move(classes), sp);
}

ProofNode P(const char* text) { return ProofNode::premise(C(text)); }
ProofNode N(const char* text, std::vector<ProofNode> children) {
  return ProofNode::derived(C(text), std::move(children));
}

// A tree compared structurally: conclusions by class, children as ordered
// sets under the recursive order. Independent of the serialization.
struct Tree {
  PropClass conclusion;
  bool premise = true;
  std::set<Tree> children;

  friend bool operator<(const Tree& a, const Tree& b) {
    if (a.conclusion != b.conclusion) return a.conclusion < b.conclusion;
    if (a.premise != b.premise) return a.premise;
    return std::lexicographical_compare(a.children.begin(), a.children.end(), b.children.begin(),
                                        b.children.end());
  }
};

ProofNode to_node(const Tree& t) {
  if (t.premise) return ProofNode::premise(t.conclusion);
  std::vector<ProofNode> kids;
  for (const auto& c : t.children) kids.push_back(to_node(c));
  return ProofNode::derived(t.conclusion, std::move(kids));
}

// The tautology rule checked at one node, ignoring its children.
bool node_is_normal(const ProofNode& r) {
  return !r.conclusion().is_tautology() || r.is_premise();
}

bool all_normal(const ProofNode& r) {
  if (!node_is_normal(r)) return false;
  for (const auto& c : r.children()) {
    if (!all_normal(c)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("canonical serialization format") {
  CHECK(canonical_serialize(P("p")) == "{[p;01],{0}}");
  CHECK(Justification::premise().text() == "{0}");
  const ProofNode ab = N("p | q", {P("p"), P("q")});
  const ProofNode ba = N("p | q", {P("q"), P("p")});
  CHECK(canonical_serialize(ab) == canonical_serialize(ba));
  CHECK(canonical_serialize(ab) == "{[p,q;0111],{{[p;01],{0}},{[q;01],{0}}}}");
  const ProofNode dup = N("p | q", {P("q"), P("p"), P("q")});
  CHECK(ab == dup);
  CHECK(dup.children().size() == 2);
  CHECK_THROWS_AS(Justification::of({}), std::invalid_argument);
}

TEST_CASE("distinct trees of depth at most two have distinct serializations") {
  const std::vector<PropClass> classes{C("p"), C("q"), C("p & q"), C("p | q")};
  std::vector<Tree> level0;
  for (const auto& c : classes) level0.push_back({c, true, {}});
  std::vector<Tree> level1 = level0;
  for (const auto& c : classes) {
    for (unsigned mask = 1; mask < 16; ++mask) {
      Tree t{c, false, {}};
      for (unsigned k = 0; k < 4; ++k) {
        if ((mask >> k) & 1u) t.children.insert(level0[k]);
      }
      level1.push_back(t);
    }
  }
  REQUIRE(level1.size() == 64);
  std::set<Tree> trees(level1.begin(), level1.end());
  for (const auto& c : classes) {
    for (std::size_t i = 0; i < level1.size(); ++i) {
      for (std::size_t j = i; j < level1.size(); ++j) {
        trees.insert(Tree{c, false, {level1[i], level1[j]}});
      }
    }
  }
  std::set<std::string> texts;
  for (const auto& t : trees) texts.insert(canonical_serialize(to_node(t)));
  CHECK(trees.size() > 8000);
  CHECK(texts.size() == trees.size());
}

TEST_CASE("digest is SHA-256 of the serialization") {
  const ProofDigest d = digest(P("p"));
  CHECK(d.hex() == "404deef220a16ebfd748e56a1906a1c61437f5bb5b40f72090091dfba2a4a14f");
  CHECK(digest(N("p | q", {P("p"), P("q")})) == digest(N("p | q", {P("q"), P("p")})));
  CHECK_FALSE(digest(P("p")) == digest(P("q")));
}

TEST_CASE("parse_proof round-trips and accepts any child order") {
  const ProofNode r = N("p | q | r", {P("p"), N("p | q", {P("p")})});
  CHECK(parse_proof(canonical_serialize(r)) == r);
  CHECK(canonical_serialize(parse_proof(canonical_serialize(r))) == canonical_serialize(r));
  const ProofNode swapped = parse_proof("{[p,q;0111],{{[q;01],{0}},{[p;01],{0}},{[q;01],{0}}}}");
  CHECK(swapped == N("p | q", {P("p"), P("q")}));
  CHECK_THROWS_AS(parse_proof("{[p;01],{}}"), SyntaxError);
  CHECK_THROWS_AS(parse_proof("{[p;01],{0}"), SyntaxError);
  CHECK_THROWS_AS(parse_proof("{[p;01],{0}} "), SyntaxError);
  CHECK_THROWS_AS(parse_proof("{[q,p;0111],{0}}"), SyntaxError);
}

TEST_CASE("build_proof examples") {
  const SigmaPrime sp = extend({"p"});
  const Deduction d = D({"p", "p | q", "p | q | r"}, sp);
  const ProofNode r = build_proof(d, induce_interpretation(d));
  CHECK(r == N("p | q | r", {P("p"), N("p | q", {P("p")})}));

  const Deduction single = D({"p"}, sp);
  CHECK(build_proof(single, Interpretation(std::vector<IndexSet>{IndexSet{}})) == P("p"));

  const Deduction taut = D({"p", "p | ~p"}, sp);
  CHECK(build_proof(taut, Interpretation({{}, {1}})) == ProofNode::premise(PropClass::tautology()));
  CHECK(build_proof(taut, Interpretation({{}, {}})) == ProofNode::premise(PropClass::tautology()));

  CHECK_THROWS_AS(build_proof(d, Interpretation({{}, {}, {2, 1, 1}})), Error);
  try {
    build_proof(D({"q"}, sp), Interpretation(std::vector<IndexSet>{IndexSet{}}));
    FAIL("expected InvalidInterpretation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInterpretation);
  }
}

TEST_CASE("build_proof output respects membership and local entailment") {
  const SigmaPrime sp = extend({"p", "q | r"});
  Rng rng(8);
  const auto pool = atom_names(4);
  for (int i = 0; i < 150; ++i) {
    const auto gen = random_valid_deduction(rng, sp, pool, 7);
    const ProofNode r = build_proof(gen.deduction, induce_interpretation(gen.deduction));
    CHECK(all_normal(r));
    for (const auto& c : conclusions(r)) CHECK(member(sp, c));
    std::vector<ProofNode> stack{r};
    while (!stack.empty()) {
      const ProofNode node = stack.back();
      stack.pop_back();
      if (node.is_premise()) continue;
      std::vector<PropClass> kids;
      for (const auto& c : node.children()) {
        kids.push_back(c.conclusion());
        stack.push_back(c);
      }
      CHECK((entails(big_and(kids), node.conclusion()) || entails(big_or(kids), node.conclusion())));
    }
  }
}

TEST_CASE("normalize examples") {
  const PropClass top = PropClass::tautology();
  const ProofNode raw = ProofNode::derived(top, {P("p")});
  CHECK(normalize(raw) == ProofNode::premise(top));
  const ProofNode fine = N("p | q", {P("p")});
  CHECK(normalize(fine) == fine);
  const ProofNode nested = N("p | q", {raw, P("p")});
  CHECK(normalize(nested) == N("p | q", {ProofNode::premise(top), P("p")}));
}

TEST_CASE("normalize is idempotent and only touches tautology nodes") {
  const SigmaPrime sp = extend({"p", "q"});
  Rng rng(12);
  const auto pool = atom_names(3);
  for (int i = 0; i < 300; ++i) {
    // Put a raw tautology node somewhere in the tree.
    const ProofNode base = random_proof(rng, sp, pool, 2, 3);
    const ProofNode raw = ProofNode::derived(base.conclusion(),
                                             {base, ProofNode::derived(PropClass::tautology(), {base})});
    const ProofNode once = normalize(raw);
    CHECK(all_normal(once));
    CHECK(normalize(once) == once);
    CHECK(once.conclusion() == raw.conclusion());
    std::vector<PropClass> before;
    std::vector<PropClass> after;
    for (const auto& c : conclusions(raw)) {
      if (!c.is_tautology()) before.push_back(c);
    }
    for (const auto& c : conclusions(once)) {
      if (!c.is_tautology()) after.push_back(c);
    }
    CHECK(std::set<PropClass>(before.begin(), before.end()) ==
          std::set<PropClass>(after.begin(), after.end()));
  }
}

TEST_CASE("proof_eq and essential equality") {
  const SigmaPrime sp = extend({"p", "q"});
  const Deduction d = D({"p", "q", "p & q"}, sp);
  const Deduction e = D({"q", "p", "p & q"}, sp);
  const Interpretation phi = induce_interpretation(d);
  const Interpretation psi = induce_interpretation(e);
  CHECK(essentially_equal(d, phi, d, phi));
  CHECK(essentially_equal(d, phi, e, psi));
  CHECK(build_proof(d, phi) == N("p & q", {P("p"), P("q")}));
  const Deduction f = D({"p", "p | q"}, sp);
  const Deduction g = D({"q", "p | q"}, sp);
  CHECK_FALSE(essentially_equal(f, induce_interpretation(f), g, induce_interpretation(g)));
}

TEST_CASE("proof_eq is an equivalence and the digest is a complete invariant") {
  const SigmaPrime sp = extend({"p", "q"});
  Rng rng(3);
  const auto pool = atom_names(2);
  std::vector<ProofNode> pool_proofs;
  for (int i = 0; i < 60; ++i) pool_proofs.push_back(random_proof(rng, sp, pool, 2, 2));
  for (const auto& a : pool_proofs) {
    CHECK(proof_eq(a, a));
    for (const auto& b : pool_proofs) {
      CHECK(proof_eq(a, b) == proof_eq(b, a));
      CHECK((digest(a) == digest(b)) == (canonical_serialize(a) == canonical_serialize(b)));
      CHECK(proof_eq(a, b) == (canonical_serialize(a) == canonical_serialize(b)));
      if (!proof_eq(a, b)) continue;
      for (const auto& c : pool_proofs) {
        if (proof_eq(b, c)) CHECK(proof_eq(a, c));
      }
    }
  }
}

TEST_CASE("premises and less_forced") {
  const ProofNode one = N("p | q", {P("p")});
  CHECK(premises(one) == std::set<PropClass>{C("p")});
  const ProofNode two = N("p | q", {P("p"), P("q")});
  CHECK(premises(two) == std::set<PropClass>{C("p"), C("q")});
  CHECK(less_forced(one, two));
  CHECK_FALSE(less_forced(two, one));
  CHECK_FALSE(less_forced(one, one));
  CHECK(premises(P("p | q")) == std::set<PropClass>{C("p | q")});
}

TEST_CASE("pretty_print renders conclusions as formulas") {
  CHECK(pretty_print(P("p")) == "p  [premise]\n");
  CHECK(pretty_print(N("p & q", {P("p")})) == "p & q\n  p  [premise]\n");
}
