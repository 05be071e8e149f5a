"""Boole's algebra of classes over a finite universe.

The carrier is the power set of {0, .., n-1}; multiplication is
intersection and is total, while addition is union restricted to
disjoint pairs and subtraction is set difference restricted to
contained pairs.  Elements are encoded as bitmasks and named by their
member lists, ``{}`` through ``{0,1,..}``.

The characteristic map sends a class to its 0/1 indicator vector, and
is an embedding into the ring of integer vectors under componentwise
operations; that target is computed analytically, never tabulated.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .algebra import UNDEFINED, FinitePartialAlgebra, eval_term
from .errors import CapExceeded
from .terms import Term, variables

MAX_UNIVERSE = 5


def subset_name(mask: int) -> str:
    members = [str(i) for i in range(mask.bit_length()) if mask >> i & 1]
    return "{" + ",".join(members) + "}"


@dataclass(frozen=True)
class ClassAlgebra:
    """A power-set partial algebra plus its bitmask bookkeeping."""

    universe_size: int
    algebra: FinitePartialAlgebra

    @property
    def empty_name(self) -> str:
        return subset_name(0)

    @property
    def universe_name(self) -> str:
        return subset_name((1 << self.universe_size) - 1)

    def mask_of(self, name: str) -> int:
        return self.algebra.carrier.index(name)

    def name_of(self, mask: int) -> str:
        return self.algebra.carrier[mask]


@lru_cache(maxsize=None)
def _build_pu_cached(n: int) -> ClassAlgebra:
    size = 1 << n
    names = [subset_name(mask) for mask in range(size)]
    mul = {}
    add = {}
    sub = {}
    for a in range(size):
        for b in range(size):
            key = (names[a], names[b])
            mul[key] = names[a & b]
            if a & b == 0:
                add[key] = names[a | b]
            if b & ~a == 0:
                sub[key] = names[a & ~b]
    tables = {
        "+": add,
        "-": sub,
        "*": mul,
        "0": {(): names[0]},
        "1": {(): names[size - 1]},
    }
    signature = (("+", 2), ("-", 2), ("*", 2), ("0", 0), ("1", 0))
    return ClassAlgebra(n, FinitePartialAlgebra(tuple(names), signature, tables))


def build_pu(n: int, max_n: int = MAX_UNIVERSE) -> ClassAlgebra:
    """The class algebra of a universe with n points.

    The carrier has 2^n elements in bitmask order, so n is capped
    (default 5).
    """
    if n < 1:
        raise ValueError("the universe must be nonempty")
    if n > max_n:
        raise CapExceeded(f"universe size {n} exceeds the limit of {max_n}")
    return _build_pu_cached(n)


@dataclass(frozen=True)
class IntVector:
    """Fixed-length integer vector with componentwise ring operations."""

    entries: tuple[int, ...]

    @classmethod
    def zero(cls, n: int) -> "IntVector":
        return cls((0,) * n)

    @classmethod
    def ones(cls, n: int) -> "IntVector":
        return cls((1,) * n)

    def _zip(self, other, f):
        if len(self.entries) != len(other.entries):
            raise ValueError("vector length mismatch")
        return IntVector(tuple(f(a, b) for a, b in zip(self.entries, other.entries)))

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._zip(other, lambda a, b: a * b)


def chi(mask: int, n: int) -> IntVector:
    """Indicator vector of the class with the given bitmask."""
    return IntVector(tuple(mask >> i & 1 for i in range(n)))


@dataclass(frozen=True)
class ChiVerdict:
    """Outcome of checking the indicator map entry by entry."""

    ok: bool
    entries_checked: int
    failing: str | None = None

    def __bool__(self):
        return self.ok


def verify_chi_embedding(n: int, max_n: int = MAX_UNIVERSE) -> ChiVerdict:
    """Check that the indicator map embeds the class algebra into the
    integer-vector ring.

    Every defined table entry of +, -, * must agree with the
    componentwise vector operation on the images, the constants must
    land on the zero and all-ones vectors, and the map must be
    injective.  The vector side is computed, not tabulated.
    """
    ca = build_pu(n, max_n)
    size = 1 << n
    images = [chi(mask, n) for mask in range(size)]
    if len(set(images)) != size:
        return ChiVerdict(False, 0, "indicator map is not injective")
    vector_op = {
        "+": IntVector.__add__,
        "-": IntVector.__sub__,
        "*": IntVector.__mul__,
    }
    checked = 0
    for op, args, value in ca.algebra.defined_entries():
        checked += 1
        if op in vector_op:
            a, b = (ca.mask_of(x) for x in args)
            got = vector_op[op](images[a], images[b])
            expected = images[ca.mask_of(value)]
        else:
            got = images[ca.mask_of(value)]
            expected = IntVector.zero(n) if op == "0" else IntVector.ones(n)
        if got != expected:
            where = f"{op}{args}" if args else op
            return ChiVerdict(False, checked, f"mismatch at {where}")
    return ChiVerdict(True, checked)


@dataclass(frozen=True)
class SemanticVerdict:
    """Validity across class algebras up to a universe-size bound.

    ``valid`` means no counter-assignment was found for any universe
    size up to ``max_n``; it is a bounded claim, not validity over all
    universes.  The witness, if any, names the smallest universe and
    the lexicographically least bitmask assignment that satisfies the
    premisses, defines every term, and falsifies the conclusion.
    """

    valid: bool
    max_n: int
    witness_n: int | None = None
    witness: dict | None = None

    def __bool__(self):
        return self.valid


def semantic_consequence(
    premisses, conclusion, max_n: int = 3, cap: int = MAX_UNIVERSE
) -> SemanticVerdict:
    """Does the conclusion follow from the premisses in every class
    algebra with at most max_n points?

    Ground equations over class symbols; an assignment counts only if
    every term of every equation is defined under it.
    """
    names: set[str] = set()
    for lhs, rhs in [*premisses, conclusion]:
        names.update(variables(lhs))
        names.update(variables(rhs))
    ordered = tuple(sorted(names))
    all_terms: list[Term] = []
    for lhs, rhs in [*premisses, conclusion]:
        all_terms += [lhs, rhs]
    for n in range(1, max_n + 1):
        ca = build_pu(n, cap)
        algebra = ca.algebra
        for masks in itertools.product(range(1 << n), repeat=len(ordered)):
            assignment = {v: algebra.carrier[m] for v, m in zip(ordered, masks)}
            values = []
            for t in all_terms:
                val = eval_term(algebra, t, assignment)
                if val is UNDEFINED:
                    break
                values.append(val)
            if len(values) != len(all_terms):
                continue
            if any(values[2 * i] != values[2 * i + 1] for i in range(len(premisses))):
                continue
            if values[-2] != values[-1]:
                return SemanticVerdict(False, max_n, n, assignment)
    return SemanticVerdict(True, max_n)
