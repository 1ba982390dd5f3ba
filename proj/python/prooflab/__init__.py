"""Propositional classes, Lindenbaum extensions and proof trees."""

from ._core import (
    Deduction,
    Error,
    Formula,
    PropClass,
    ProofNode,
    Scalar,
    SigmaPrime,
    all_classes,
    big_and,
    big_or,
    canonicalize,
    eliminate_subproof,
    embed_premise,
    extract_subproof,
    find_occurrences,
    gamma,
    neutral_proof,
    nth_prime,
    proof_sum,
    replace_subproof,
    scalar_mul,
)

__all__ = [
    "Deduction",
    "Error",
    "Formula",
    "PropClass",
    "ProofNode",
    "Scalar",
    "SigmaPrime",
    "all_classes",
    "big_and",
    "big_or",
    "canonicalize",
    "eliminate_subproof",
    "embed_premise",
    "extract_subproof",
    "find_occurrences",
    "gamma",
    "neutral_proof",
    "nth_prime",
    "proof_sum",
    "replace_subproof",
    "scalar_mul",
]
