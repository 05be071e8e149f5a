"""Symbolic consequence: cofactor certificates and derivation traces.

A certificate for "premisses entail conclusion" exhibits an integer
n >= 1 and one multilinear cofactor per premiss with

    n * (lhs - rhs)  =  sum_j cofactor_j * (lhs_j - rhs_j)

as multilinear polynomials; verification is a normalization to zero,
so a certificate is checkable without trusting the search that found
it.  Certificates serialize as {"n": ..., "cofactors": [...]} with
each cofactor a list of monomial/coeff records.

A trace is a numbered list of equations, each justified by a rule tag.
Hailperin mode admits idempotence only on a bare class symbol;
sigma1 mode admits it on arbitrary terms, which is exactly the
unsound-for-classes reading that lets 2x = 0 and then x = 0 be derived
from nothing.  Trace files carry one step per line:

    k: lhs = rhs [Rule args]

with rule arguments as step numbers, integers, or terms (Congruence
contexts mark the hole with the reserved identifier HOLE).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapExceeded
from .polynomial import (
    MultilinearPoly,
    boole_oracle,
    equation_difference,
    unexpand,
    ConstituentExpansion,
    vertices,
)
from .terms import (
    Add,
    IntLit,
    Mul,
    Sub,
    Term,
    Var,
    count_var,
    parse,
    pretty,
    replaced_once,
    substitute,
)

HAILPERIN = "hailperin"
SIGMA1 = "sigma1"
MODES = (HAILPERIN, SIGMA1)

HOLE = "HOLE"


# ---------------------------------------------------------------- certificates


@dataclass(frozen=True)
class Certificate:
    """A verified-checkable witness of symbolic consequence."""

    n: int
    cofactors: tuple[MultilinearPoly, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("certificate multiplier must be at least 1")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "cofactors": [c.to_records() for c in self.cofactors],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Certificate":
        cofactors = tuple(
            MultilinearPoly.from_records(rec) for rec in data["cofactors"]
        )
        return cls(int(data["n"]), cofactors)


@dataclass(frozen=True)
class CertificateCheck:
    """Verified, or rejected with the nonzero residual."""

    verified: bool
    residual: MultilinearPoly | None = None

    def __bool__(self):
        return self.verified


def verify_certificate(premisses, conclusion, certificate: Certificate) -> CertificateCheck:
    """Recompute n*f - sum of cofactor_j * g_j and test it for zero."""
    if len(certificate.cofactors) != len(premisses):
        raise ValueError(
            f"{len(certificate.cofactors)} cofactors for {len(premisses)} premisses"
        )
    residual = certificate.n * equation_difference(conclusion)
    for cofactor, eq in zip(certificate.cofactors, premisses):
        residual = residual - cofactor * equation_difference(eq)
    if residual.is_zero:
        return CertificateCheck(True)
    return CertificateCheck(False, residual)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _bezout(values) -> tuple[int, list[int]]:
    """gcd of the values plus integer coefficients realizing it."""
    g = 0
    coeffs = [0] * len(values)
    for i, v in enumerate(values):
        if v == 0:
            continue
        if g == 0:
            g = abs(v)
            coeffs[i] = 1 if v > 0 else -1
            continue
        g2, s, t = _ext_gcd(g, v)
        coeffs = [c * s for c in coeffs]
        coeffs[i] = t
        g = g2
    return g, coeffs


def certify_consequence(premisses, conclusion, max_vars: int = 20) -> Certificate | None:
    """Search for a certificate; None exactly when the 0/1-vertex
    oracle rejects the consequence.

    The construction works vertex by vertex: at each vertex where the
    conclusion difference is nonzero, the premiss differences must span
    its multiple, and the Bezout coefficients become the cofactor
    values there.  The multiplier n is the least common multiple of the
    local denominators, so it is minimal for this construction.
    Cofactors are rebuilt from their vertex values and are not further
    minimized.
    """
    verdict = boole_oracle(premisses, conclusion, max_vars=max_vars)
    if not verdict.valid:
        return None
    diffs = [equation_difference(eq) for eq in premisses]
    f = equation_difference(conclusion)
    pool = set(f.vars)
    for g in diffs:
        pool.update(g.vars)
    names = tuple(sorted(pool))
    grid = vertices(names)
    per_vertex: dict[tuple[int, ...], tuple[int, list[int]]] = {}
    n = 1
    for v in grid:
        a = dict(zip(names, v))
        gvals = [g.evaluate(a) for g in diffs]
        fval = f.evaluate(a)
        per_vertex[v] = (fval, gvals)
        if fval != 0:
            d = math.gcd(*gvals) if gvals else 0
            # oracle validity rules out d == 0 alongside fval != 0
            n = math.lcm(n, d // math.gcd(d, fval))
    cofactor_values: list[dict[tuple[int, ...], int]] = [dict() for _ in diffs]
    for v in grid:
        fval, gvals = per_vertex[v]
        if fval == 0:
            for table in cofactor_values:
                table[v] = 0
            continue
        d, coeffs = _bezout(gvals)
        scale = n * fval // d
        for table, c in zip(cofactor_values, coeffs):
            table[v] = c * scale
    cofactors = tuple(
        unexpand(ConstituentExpansion(names, table)) for table in cofactor_values
    )
    return Certificate(n, cofactors)


# ---------------------------------------------------------------------- traces


@dataclass(frozen=True)
class Premiss:
    pass


@dataclass(frozen=True)
class RingAxiomInstance:
    pass


@dataclass(frozen=True)
class DeltaIdempotence:
    target: Term


@dataclass(frozen=True)
class Refl:
    pass


@dataclass(frozen=True)
class Sym:
    step: int


@dataclass(frozen=True)
class Trans:
    first: int
    second: int


@dataclass(frozen=True)
class Congruence:
    step: int
    context: Term  # exactly one occurrence of Var("HOLE")


@dataclass(frozen=True)
class NoNilpotent:
    step: int
    n: int


@dataclass(frozen=True)
class IntegerSimplification:
    step: int


@dataclass(frozen=True)
class TraceStep:
    lhs: Term
    rhs: Term
    rule: object


@dataclass(frozen=True)
class DerivationTrace:
    premisses: tuple
    steps: tuple[TraceStep, ...]

    @property
    def conclusion(self):
        if not self.steps:
            raise ValueError("empty trace has no conclusion")
        last = self.steps[-1]
        return (last.lhs, last.rhs)


@dataclass(frozen=True)
class TraceVerdict:
    """Accepted, or rejected at a 1-based step with a reason."""

    accepted: bool
    step: int | None = None
    reason: str | None = None

    def __bool__(self):
        return self.accepted


# The free commutative ring with unity: exponent-tracking monomials.
# Two terms are instances of one ring identity exactly when their ring
# normal forms agree, which keeps RingAxiomInstance decidable.


def _rp_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for mono, c in q.items():
        s = out.get(mono, 0) + c
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)
    return out


def _rp_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for m1, c1 in p.items():
        e1 = dict(m1)
        for m2, c2 in q.items():
            merged = dict(e1)
            for name, exp in m2:
                merged[name] = merged.get(name, 0) + exp
            mono = tuple(sorted(merged.items()))
            s = out.get(mono, 0) + c1 * c2
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return out


def ring_normalize(t: Term) -> dict:
    """Normal form in the free commutative ring with unity, with true
    exponents (no idempotence)."""
    if isinstance(t, Var):
        return {((t.name, 1),): 1}
    if isinstance(t, IntLit):
        return {(): t.value} if t.value else {}
    if isinstance(t, Add):
        return _rp_add(ring_normalize(t.left), ring_normalize(t.right))
    if isinstance(t, Sub):
        neg = {m: -c for m, c in ring_normalize(t.right).items()}
        return _rp_add(ring_normalize(t.left), neg)
    if isinstance(t, Mul):
        return _rp_mul(ring_normalize(t.left), ring_normalize(t.right))
    raise TypeError(f"not a term: {t!r}")


def _check_step(trace, k: int, mode: str) -> str | None:
    """None if step k is justified, else the reason it is not."""
    step = trace.steps[k - 1]
    rule = step.rule
    eq = (step.lhs, step.rhs)

    def earlier(i: int) -> TraceStep | None:
        if not 1 <= i < k:
            return None
        return trace.steps[i - 1]

    if isinstance(rule, Premiss):
        if eq in tuple(trace.premisses):
            return None
        return "equation is not one of the premisses"
    if isinstance(rule, RingAxiomInstance):
        if ring_normalize(step.lhs) == ring_normalize(step.rhs):
            return None
        return "sides differ in the free commutative ring with unity"
    if isinstance(rule, DeltaIdempotence):
        target = rule.target
        if mode == HAILPERIN and not isinstance(target, Var):
            return (
                f"idempotence target {pretty(target)} is not a class symbol"
            )
        square = Mul(target, target)
        if any(c == step.rhs for c in replaced_once(step.lhs, square, target)):
            return None
        return (
            f"right side is not the left with one {pretty(square)} rewritten to "
            f"{pretty(target)}"
        )
    if isinstance(rule, Refl):
        if step.lhs == step.rhs:
            return None
        return "sides are not identical"
    if isinstance(rule, Sym):
        prev = earlier(rule.step)
        if prev is None:
            return f"step {rule.step} is not an earlier step"
        if eq == (prev.rhs, prev.lhs):
            return None
        return f"equation is not step {rule.step} reversed"
    if isinstance(rule, Trans):
        first = earlier(rule.first)
        second = earlier(rule.second)
        if first is None or second is None:
            return "both referenced steps must be earlier"
        if first.rhs != second.lhs:
            return (
                f"steps {rule.first} and {rule.second} do not chain: middle terms differ"
            )
        if eq == (first.lhs, second.rhs):
            return None
        return "equation is not the chained composite"
    if isinstance(rule, Congruence):
        prev = earlier(rule.step)
        if prev is None:
            return f"step {rule.step} is not an earlier step"
        if count_var(rule.context, HOLE) != 1:
            return "context must contain the hole exactly once"
        built = (
            substitute(rule.context, {HOLE: prev.lhs}),
            substitute(rule.context, {HOLE: prev.rhs}),
        )
        if eq == built:
            return None
        return "equation is not the context applied to both sides of the step"
    if isinstance(rule, NoNilpotent):
        prev = earlier(rule.step)
        if prev is None:
            return f"step {rule.step} is not an earlier step"
        if rule.n < 1:
            return "the multiplier must be a positive integer"
        expected_lhs = Mul(IntLit(rule.n), step.lhs)
        if prev.lhs == expected_lhs and prev.rhs == IntLit(0) and step.rhs == IntLit(0):
            return None
        return (
            f"step {rule.step} is not {rule.n}*t = 0 for this step's t = 0"
        )
    if isinstance(rule, IntegerSimplification):
        prev = earlier(rule.step)
        if prev is None:
            return f"step {rule.step} is not an earlier step"
        if equation_difference(eq) == equation_difference((prev.lhs, prev.rhs)):
            return None
        return (
            "side difference does not match the referenced step's "
            "(ring laws plus class-symbol idempotence)"
        )
    return f"unknown rule {rule!r}"


def check_trace(trace: DerivationTrace, mode: str) -> TraceVerdict:
    """Validate every step under the given mode; first failure wins."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    for k in range(1, len(trace.steps) + 1):
        reason = _check_step(trace, k, mode)
        if reason is not None:
            return TraceVerdict(False, k, reason)
    return TraceVerdict(True)


# ----------------------------------------------------------- trace text format


def _format_rule(rule) -> str:
    if isinstance(rule, Premiss):
        return "Premiss"
    if isinstance(rule, RingAxiomInstance):
        return "RingAxiomInstance"
    if isinstance(rule, DeltaIdempotence):
        return f"DeltaIdempotence {pretty(rule.target)}"
    if isinstance(rule, Refl):
        return "Refl"
    if isinstance(rule, Sym):
        return f"Sym {rule.step}"
    if isinstance(rule, Trans):
        return f"Trans {rule.first} {rule.second}"
    if isinstance(rule, Congruence):
        return f"Congruence {rule.step} {pretty(rule.context)}"
    if isinstance(rule, NoNilpotent):
        return f"NoNilpotent {rule.step} {rule.n}"
    if isinstance(rule, IntegerSimplification):
        return f"IntegerSimplification {rule.step}"
    raise TypeError(f"unknown rule {rule!r}")


def format_trace(trace: DerivationTrace) -> str:
    lines = []
    for k, step in enumerate(trace.steps, 1):
        lines.append(
            f"{k}: {pretty(step.lhs)} = {pretty(step.rhs)} [{_format_rule(step.rule)}]"
        )
    return "\n".join(lines) + "\n"


def _parse_rule(text: str):
    parts = text.split(None, 1)
    if not parts:
        raise ValueError("empty rule tag")
    name = parts[0]
    rest = parts[1] if len(parts) > 1 else ""
    if name == "Premiss":
        return Premiss() if not rest else None
    if name == "RingAxiomInstance":
        return RingAxiomInstance() if not rest else None
    if name == "Refl":
        return Refl() if not rest else None
    if name == "DeltaIdempotence":
        return DeltaIdempotence(parse(rest))
    if name == "Sym":
        return Sym(int(rest))
    if name == "Trans":
        a, b = rest.split()
        return Trans(int(a), int(b))
    if name == "Congruence":
        head, _, context = rest.partition(" ")
        return Congruence(int(head), parse(context))
    if name == "NoNilpotent":
        a, b = rest.split()
        return NoNilpotent(int(a), int(b))
    if name == "IntegerSimplification":
        return IntegerSimplification(int(rest))
    raise ValueError(f"unknown rule name {name!r}")


def parse_trace(text: str, premisses=()) -> DerivationTrace:
    """Parse the numbered-step trace format; steps must be numbered
    consecutively from 1."""
    steps = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(":")
        if not head.strip().isdigit():
            raise ValueError(f"line {lineno}: missing step number")
        k = int(head)
        if k != len(steps) + 1:
            raise ValueError(f"line {lineno}: expected step {len(steps) + 1}, got {k}")
        body, bracket, tail = rest.rpartition("[")
        if not bracket or not tail.rstrip().endswith("]"):
            raise ValueError(f"line {lineno}: missing [Rule] tag")
        rule = _parse_rule(tail.rstrip().removesuffix("]").strip())
        if rule is None:
            raise ValueError(f"line {lineno}: malformed rule tag")
        if body.count("=") != 1:
            raise ValueError(f"line {lineno}: step needs exactly one '='")
        lhs_text, _, rhs_text = body.partition("=")
        steps.append(TraceStep(parse(lhs_text), parse(rhs_text), rule))
    return DerivationTrace(tuple(premisses), tuple(steps))
