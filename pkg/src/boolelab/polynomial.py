"""Multilinear integer polynomials over idempotent class symbols.

A monomial is a set of variable names, so multiplication unions
monomials: this is arithmetic in Z[vars] modulo the ideal generated by
v*v - v.  Every term of the class signature has a unique normal form
here, and evaluating that normal form on {0,1} vertices is the
"variables susceptible of the values 0 and 1" reading of a term.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from types import MappingProxyType

from .errors import CapExceeded
from .terms import Add, IntLit, Mul, Sub, Term, Var, variables

Monomial = frozenset


def _monomial_key(mono: frozenset) -> tuple:
    # degree first, then variable names: degree-lexicographic order
    return (len(mono), tuple(sorted(mono)))


class MultilinearPoly:
    """Integer polynomial with exponents at most one.

    ``vars`` may list variables that no monomial uses (a normal form
    remembers every variable of the source term, even cancelled ones);
    equality and hashing look at the coefficients only, which matches
    equality modulo the idempotence ideal.
    """

    __slots__ = ("vars", "_coeffs")

    def __init__(self, vars=(), coeffs=None):
        vs = tuple(sorted(set(vars)))
        cleaned: dict[frozenset, int] = {}
        for mono, c in (coeffs or {}).items():
            mono = frozenset(mono)
            if not mono <= set(vs):
                vs = tuple(sorted(set(vs) | mono))
            if c:
                cleaned[mono] = c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "_coeffs", cleaned)

    def __setattr__(self, name, value):
        raise AttributeError("MultilinearPoly is immutable")

    @property
    def coeffs(self):
        return MappingProxyType(self._coeffs)

    @classmethod
    def const(cls, n: int, vars=()) -> "MultilinearPoly":
        return cls(vars, {frozenset(): n})

    @classmethod
    def variable(cls, name: str) -> "MultilinearPoly":
        return cls((name,), {frozenset((name,)): 1})

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, mono) -> int:
        return self._coeffs.get(frozenset(mono), 0)

    def with_vars(self, extra) -> "MultilinearPoly":
        return MultilinearPoly(set(self.vars) | set(extra), self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = MultilinearPoly.const(other)
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        coeffs = dict(self._coeffs)
        for mono, c in other._coeffs.items():
            coeffs[mono] = coeffs.get(mono, 0) + c
        return MultilinearPoly(set(self.vars) | set(other.vars), coeffs)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return MultilinearPoly(self.vars, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = MultilinearPoly.const(other)
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            coeffs = {m: c * other for m, c in self._coeffs.items()}
            return MultilinearPoly(self.vars, coeffs)
        if not isinstance(other, MultilinearPoly):
            return NotImplemented
        coeffs: dict[frozenset, int] = {}
        for m1, c1 in self._coeffs.items():
            for m2, c2 in other._coeffs.items():
                mono = m1 | m2  # union = idempotent exponent collapse
                coeffs[mono] = coeffs.get(mono, 0) + c1 * c2
        return MultilinearPoly(set(self.vars) | set(other.vars), coeffs)

    def __rmul__(self, other):
        return self.__mul__(other)

    def evaluate(self, assignment) -> int:
        """Value under an integer assignment covering every monomial."""
        total = 0
        for mono, c in self._coeffs.items():
            v = c
            for name in mono:
                v *= assignment[name]
            total += v
        return total

    def ordered_monomials(self) -> list[tuple[frozenset, int]]:
        return sorted(self._coeffs.items(), key=lambda kv: _monomial_key(kv[0]))

    def to_records(self) -> list[dict]:
        return [
            {"monomial": sorted(mono), "coeff": c}
            for mono, c in self.ordered_monomials()
        ]

    @classmethod
    def from_records(cls, records) -> "MultilinearPoly":
        coeffs: dict[frozenset, int] = {}
        for rec in records:
            mono = frozenset(rec["monomial"])
            coeffs[mono] = coeffs.get(mono, 0) + int(rec["coeff"])
        return cls((), coeffs)

    def __str__(self):
        monos = self.ordered_monomials()
        if not monos:
            return "0"
        parts = []
        for mono, c in monos:
            body = "*".join(sorted(mono))
            if not body:
                chunk = str(abs(c))
            elif abs(c) == 1:
                chunk = body
            else:
                chunk = f"{abs(c)}*{body}"
            parts.append((c < 0, chunk))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, chunk in parts[1:]:
            out += (" - " if neg else " + ") + chunk
        return out

    def __repr__(self):
        return f"MultilinearPoly({self})"


def normalize(term: Term) -> MultilinearPoly:
    """Unique multilinear normal form of a term.

    Two terms get equal normal forms exactly when every commutative ring
    with unity makes them equal under every assignment of idempotent
    elements to the variables.
    """
    return _normalize(term).with_vars(variables(term))


def _normalize(t: Term) -> MultilinearPoly:
    if isinstance(t, Var):
        return MultilinearPoly.variable(t.name)
    if isinstance(t, IntLit):
        return MultilinearPoly.const(t.value)
    if isinstance(t, Add):
        return _normalize(t.left) + _normalize(t.right)
    if isinstance(t, Sub):
        return _normalize(t.left) - _normalize(t.right)
    if isinstance(t, Mul):
        return _normalize(t.left) * _normalize(t.right)
    raise TypeError(f"not a term: {t!r}")


@dataclass(frozen=True)
class ConstituentExpansion:
    """Coefficients of a polynomial at every {0,1} vertex.

    A vertex is a tuple of bits aligned with ``vars``; all 2^len(vars)
    vertices are present.  This is the development of a class term into
    constituents: the coefficient at a vertex multiplies the product of
    the variables set there and the complements of the others.
    """

    vars: tuple[str, ...]
    coeff_at: MappingProxyType

    def __post_init__(self):
        expected = set(itertools.product((0, 1), repeat=len(self.vars)))
        table = dict(self.coeff_at)
        if set(table) != expected:
            raise ValueError("expansion must cover every 0/1 vertex exactly once")
        object.__setattr__(self, "coeff_at", MappingProxyType(table))

    def vertices(self) -> list[tuple[int, ...]]:
        return sorted(self.coeff_at)

    def __str__(self):
        rows = []
        for v in self.vertices():
            bits = "".join(str(b) for b in v) if v else "()"
            rows.append(f"{bits}: {self.coeff_at[v]}")
        return "\n".join(rows)


def vertices(var_names) -> list[tuple[int, ...]]:
    """All 0/1 vertices over the given variables, lexicographically."""
    return list(itertools.product((0, 1), repeat=len(var_names)))


def expand(p: MultilinearPoly) -> ConstituentExpansion:
    """Evaluate p at every 0/1 vertex over p.vars."""
    table = {}
    for v in vertices(p.vars):
        table[v] = p.evaluate(dict(zip(p.vars, v)))
    return ConstituentExpansion(p.vars, table)


def constituent(var_names, vertex) -> MultilinearPoly:
    """Product of the variables set in ``vertex`` and the complements of
    the rest; the indicator polynomial of that vertex."""
    p = MultilinearPoly.const(1, var_names)
    for name, bit in zip(var_names, vertex):
        x = MultilinearPoly.variable(name)
        p = p * (x if bit else (1 - x))
    return p


def unexpand(e: ConstituentExpansion) -> MultilinearPoly:
    """Rebuild the polynomial as a coefficient-weighted sum of
    constituents; inverse to expand."""
    p = MultilinearPoly((), {})
    for v in e.vertices():
        c = e.coeff_at[v]
        if c:
            p = p + c * constituent(e.vars, v)
    return p.with_vars(e.vars)


INTERPRETABLE = "interpretable"
CONDITIONAL = "conditionally-interpretable"
NEVER = "never-interpretable"


@dataclass(frozen=True)
class InterpretVerdict:
    """Whether every constituent coefficient lies in {0, 1}.

    ``bad_vertices`` lists the offending vertices in lexicographic
    order; the verdict is NEVER when every vertex offends, which leaves
    no assignment of classes reading the expression as a class.
    """

    kind: str
    bad_vertices: tuple[tuple[int, ...], ...]


def interpretability(p: MultilinearPoly) -> InterpretVerdict:
    e = expand(p)
    bad = tuple(v for v in e.vertices() if e.coeff_at[v] not in (0, 1))
    if not bad:
        return InterpretVerdict(INTERPRETABLE, ())
    if len(bad) == len(e.coeff_at):
        return InterpretVerdict(NEVER, bad)
    return InterpretVerdict(CONDITIONAL, bad)


@dataclass(frozen=True)
class OracleVerdict:
    """Outcome of the 0/1-vertex consequence test.

    ``witness`` maps variables to bits at the lexicographically least
    vertex where every premiss difference vanishes but the conclusion
    difference does not.
    """

    valid: bool
    witness: dict | None = None

    def __bool__(self):
        return self.valid


def equation_difference(eq: tuple[Term, Term]) -> MultilinearPoly:
    lhs, rhs = eq
    return normalize(Sub(lhs, rhs))


def boole_oracle(premisses, conclusion, max_vars: int = 20) -> OracleVerdict:
    """Decide ground consequence by the rule of 0 and 1.

    The conclusion follows when its difference polynomial vanishes at
    every 0/1 vertex killing all premiss differences.  Exhaustive over
    2^m vertices, so m is capped (default 20).
    """
    diffs = [equation_difference(eq) for eq in premisses]
    f = equation_difference(conclusion)
    pool = set(f.vars)
    for g in diffs:
        pool.update(g.vars)
    names = sorted(pool)
    if len(names) > max_vars:
        raise CapExceeded(
            f"{len(names)} variables exceeds the limit of {max_vars}"
        )
    for v in vertices(names):
        a = dict(zip(names, v))
        if all(g.evaluate(a) == 0 for g in diffs) and f.evaluate(a) != 0:
            return OracleVerdict(False, a)
    return OracleVerdict(True)
