import itertools

import pytest

import prooflab as pl


def test_classes_and_formulas():
    assert pl.canonicalize("p | ~p").text() == "[;1]"
    assert pl.PropClass("p & (q | ~q)").text() == "[p;01]"
    c = pl.PropClass("~(p & q)")
    assert c.support == ["p", "q"]
    assert c.table == [True, True, True, False]
    assert pl.PropClass.from_text(c.text()) == c
    assert pl.PropClass(c.representative()) == c
    assert pl.Formula("p & q | r").render() == "p & q | r"
    assert pl.Formula("~p | q").eval({"p": True, "q": False}) is False
    assert len(pl.all_classes(["p", "q"])) == 16


def test_formula_eval_matches_class_table():
    f = pl.Formula("(p <-> q) | ~r")
    c = pl.PropClass("(p <-> q) | ~r")
    rows = list(itertools.product([False, True], repeat=3))
    assert c.table == [f.eval(dict(zip("pqr", row))) for row in rows]


def test_extension_membership_and_ring():
    sp = pl.SigmaPrime(["p", "q | r"])
    assert sp.witness_text() == "p=1,q=0,r=1 default=0"
    assert "p" in sp and "~p" not in sp
    assert sp.add("p", "p | q").text() == "[p,q;1011]"
    with pytest.raises(pl.Error) as info:
        sp.add("~p", "p")
    assert info.value.args[0] == "NotMember"


def test_deduction_checker_and_gamma():
    sp = pl.SigmaPrime(["p & q"])
    d = pl.Deduction(["p & q", "p", "p | r"], sp)
    valid, rows = d.check()
    assert valid
    assert rows[2] == (3, "c", [1, 2])
    assert d.induce() == [[], [1], [1, 2]]
    assert d.validate(d.induce())
    assert pl.nth_prime(1) == 2
    big = pl.gamma(list(range(1, 40)))
    assert isinstance(big, int) and big > 2**64
    assert big % 167 == 0  # the 39th prime


def test_proofs_module_and_surgery():
    sp = pl.SigmaPrime(["p", "s"])
    target = pl.ProofNode.derived("p | q", [pl.ProofNode.premise("p")])
    donor = pl.ProofNode("{[p;01],{{[p,s;0001],{0}}}}")
    assert target.serialize() == "{[p,q;0111],{{[p;01],{0}}}}"
    assert pl.ProofNode.from_file_text(target.to_file_text()) == target
    assert pl.proof_sum(target, target, sp) == pl.neutral_proof(sp)
    assert pl.scalar_mul(pl.Scalar.one(), target, sp) == target
    replaced = pl.replace_subproof(target, "p", donor, sp)
    (path,) = pl.find_occurrences(replaced, "p")
    assert pl.extract_subproof(replaced, path) == donor
    assert pl.eliminate_subproof(replaced, "p") == target
    with pytest.raises(pl.Error) as info:
        pl.replace_subproof(target, "p", pl.ProofNode.premise("p"), sp)
    assert info.value.args[0] == "PremiseDonor"


def test_syntax_errors_surface_as_error():
    with pytest.raises(pl.Error) as info:
        pl.PropClass("p &")
    assert info.value.args[0] == "Syntax"
