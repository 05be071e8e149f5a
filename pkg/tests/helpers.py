"""Shared generators and independent evaluators used across the suite.

Everything here is deliberately written against the Term constructors
only, so expected values never route through the code under test.
"""

import itertools
import random

from boolelab.algebra import FinitePartialAlgebra
from boolelab.horn import HornSentence
from boolelab.terms import Add, IntLit, Mul, Sub, Term, Var


def eval_int(t: Term, env) -> int:
    """Total evaluation over the integers, independent of the
    polynomial module."""
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, IntLit):
        return t.value
    if isinstance(t, Add):
        return eval_int(t.left, env) + eval_int(t.right, env)
    if isinstance(t, Sub):
        return eval_int(t.left, env) - eval_int(t.right, env)
    if isinstance(t, Mul):
        return eval_int(t.left, env) * eval_int(t.right, env)
    raise TypeError(f"not a term: {t!r}")


def exhaustive_terms(leaves, max_depth: int, ops=(Add, Sub, Mul)):
    """Every term of depth <= max_depth over the given leaves.

    A leaf has depth 1; each round closes under one application of the
    operations, so the result is exactly the depth-bounded term set.
    """
    terms = list(leaves)
    for _ in range(max_depth - 1):
        below = list(terms)
        terms = list(leaves)
        for op in ops:
            for a in below:
                for b in below:
                    terms.append(op(a, b))
    return terms


def random_term(rng: random.Random, names, depth: int) -> Term:
    if depth <= 1 or rng.random() < 0.2:
        if rng.random() < 0.3:
            return IntLit(rng.choice((0, 1, 1, 2, 3)))
        return Var(rng.choice(names))
    op = rng.choice((Add, Sub, Mul))
    return op(
        random_term(rng, names, depth - 1),
        random_term(rng, names, depth - 1),
    )


def random_ground_argument(rng: random.Random):
    """One random consequence instance: up to two premisses and a
    conclusion over at most three class symbols."""
    names = ("x", "y", "z")[: rng.randint(1, 3)]
    def equation():
        return (random_term(rng, names, 3), random_term(rng, names, 3))
    premisses = tuple(equation() for _ in range(rng.randint(0, 2)))
    return premisses, equation()


def small_algebras():
    """All partial algebras with one binary operation and carrier a
    nonempty subset of {0, 1}: 2 + 2 + 81 = 85 in total."""
    out = []
    for carrier in (("0",), ("1",), ("0", "1")):
        pairs = list(itertools.product(carrier, repeat=2))
        for values in itertools.product((None,) + carrier, repeat=len(pairs)):
            table = {p: v for p, v in zip(pairs, values) if v is not None}
            out.append(FinitePartialAlgebra(carrier, (("+", 2),), {"+": table}))
    return out


def random_plus_sentence(rng: random.Random) -> HornSentence:
    """A small universal Horn sentence in the one-operation signature."""
    names = ("x", "y")
    def equation():
        return (
            random_term_plus(rng, names, rng.randint(1, 3)),
            random_term_plus(rng, names, rng.randint(1, 2)),
        )
    antecedents = tuple(equation() for _ in range(rng.randint(0, 2)))
    return HornSentence(names, antecedents, equation())


def random_term_plus(rng: random.Random, names, depth: int) -> Term:
    # addition only, so every generated sentence stays in the signature
    # of the small-algebra enumeration
    if depth <= 1 or rng.random() < 0.3:
        return Var(rng.choice(names))
    return Add(
        random_term_plus(rng, names, depth - 1),
        random_term_plus(rng, names, depth - 1),
    )


def strip_timing(text: str) -> str:
    """Drop the trailing wall-clock line so golden comparisons are
    stable."""
    lines = [ln for ln in text.splitlines() if not ln.startswith("time: ")]
    return "\n".join(lines)
