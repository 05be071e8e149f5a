"""Finite partial algebras: strict evaluation and Horn satisfaction.

Operations are given by explicit tables; an absent entry means the
operation is undefined there, and undefinedness propagates strictly
through terms.  A Horn sentence is judged only on assignments where
every term appearing in it (consequent included) is defined; this
relative reading is what separates partial-algebra consequence from
consequence over total models.

Algebra files look like::

    carrier: 0 1
    op +/2:
    0 0 -> 0
    1 1 -> 1

with one block per operation in signature order and one line per
defined entry, entries in row-major carrier order.  An arity-0 block
has a single line ``-> e``.  The format round-trips exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .horn import FALSUM, HornSentence
from .terms import Add, IntLit, Mul, Sub, Term, Var


class _Undefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNDEFINED"

    def __bool__(self):
        return False


UNDEFINED = _Undefined()


class UnknownSymbolError(ValueError):
    """A term used a variable or operation the context does not supply."""


@dataclass(frozen=True)
class FinitePartialAlgebra:
    """Named carrier, signature of (name, arity) pairs, partial tables.

    Tables map argument tuples to carrier elements; constants are
    arity-0 operations keyed by the empty tuple.  Treat instances as
    immutable after construction.
    """

    carrier: tuple[str, ...]
    signature: tuple[tuple[str, int], ...]
    tables: dict

    def __post_init__(self):
        if not self.carrier:
            raise ValueError("carrier must be nonempty")
        if len(set(self.carrier)) != len(self.carrier):
            raise ValueError("carrier elements must be distinct")
        arities = dict(self.signature)
        if len(arities) != len(self.signature):
            raise ValueError("duplicate operation in signature")
        elements = set(self.carrier)
        for op, table in self.tables.items():
            if op not in arities:
                raise ValueError(f"table for {op!r} has no signature entry")
            for args, value in table.items():
                if len(args) != arities[op]:
                    raise ValueError(f"arity mismatch in table for {op!r}")
                if not set(args) <= elements or value not in elements:
                    raise ValueError(f"table for {op!r} strays outside the carrier")

    def arity(self, op: str) -> int:
        for name, k in self.signature:
            if name == op:
                return k
        raise UnknownSymbolError(f"unknown operation symbol {op!r}")

    def table(self, op: str) -> dict:
        self.arity(op)
        return self.tables.get(op, {})

    def defined_entries(self):
        """(op, args, value) triples, ops in signature order, entries in
        row-major carrier order."""
        for op, k in self.signature:
            table = self.tables.get(op, {})
            for args in itertools.product(self.carrier, repeat=k):
                if args in table:
                    yield op, args, table[args]

    def is_total(self) -> bool:
        for op, k in self.signature:
            if len(self.tables.get(op, {})) != len(self.carrier) ** k:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, FinitePartialAlgebra):
            return NotImplemented
        return (
            self.carrier == other.carrier
            and self.signature == other.signature
            and {op: dict(t) for op, t in self.tables.items() if t}
            == {op: dict(t) for op, t in other.tables.items() if t}
        )

    def __hash__(self):
        return hash((self.carrier, self.signature))


def eval_term(algebra: FinitePartialAlgebra, t: Term, assignment: dict):
    """Strict evaluation: the value of t, or UNDEFINED.

    Unknown variables and operation symbols raise; an integer literal
    outside {0, 1} evaluates by a constant table of that name when the
    signature has one and is UNDEFINED otherwise.
    """
    if isinstance(t, Var):
        if t.name not in assignment:
            raise UnknownSymbolError(f"unbound variable {t.name!r}")
        value = assignment[t.name]
        if value not in algebra.carrier:
            raise ValueError(f"assignment sends {t.name!r} outside the carrier")
        return value
    if isinstance(t, IntLit):
        name = str(t.value)
        known = {op for op, _ in algebra.signature}
        if name not in known:
            if t.value in (0, 1):
                raise UnknownSymbolError(f"no constant {name!r} in the signature")
            return UNDEFINED
        return algebra.tables.get(name, {}).get((), UNDEFINED)
    if isinstance(t, (Add, Sub, Mul)):
        op = {Add: "+", Sub: "-", Mul: "*"}[type(t)]
        if all(op != name for name, _ in algebra.signature):
            raise UnknownSymbolError(f"no operation {op!r} in the signature")
        left = eval_term(algebra, t.left, assignment)
        if left is UNDEFINED:
            return UNDEFINED
        right = eval_term(algebra, t.right, assignment)
        if right is UNDEFINED:
            return UNDEFINED
        return algebra.tables.get(op, {}).get((left, right), UNDEFINED)
    raise TypeError(f"not a term: {t!r}")


@dataclass(frozen=True)
class SatisfactionVerdict:
    """Holds, or fails with the least falsifying assignment."""

    holds: bool
    witness: dict | None = None

    def __bool__(self):
        return self.holds


def holds(algebra: FinitePartialAlgebra, sentence: HornSentence) -> SatisfactionVerdict:
    """Dom-relative satisfaction.

    Assignments range over the carrier in the sentence's variable
    order; ones leaving any term of the sentence undefined are skipped.
    The witness, if any, is the first falsifying assignment in that
    enumeration, hence the lexicographically least one.
    """
    terms = sentence.all_terms()
    n_ante = len(sentence.antecedents)
    for values in itertools.product(algebra.carrier, repeat=len(sentence.vars)):
        assignment = dict(zip(sentence.vars, values))
        evaluated = []
        for t in terms:
            v = eval_term(algebra, t, assignment)
            if v is UNDEFINED:
                break
            evaluated.append(v)
        if len(evaluated) != len(terms):
            continue  # outside the sentence's domain
        if any(evaluated[2 * i] != evaluated[2 * i + 1] for i in range(n_ante)):
            continue  # some antecedent is false
        if sentence.consequent is FALSUM or evaluated[-2] != evaluated[-1]:
            return SatisfactionVerdict(False, assignment)
    return SatisfactionVerdict(True)


def holds_total(algebra: FinitePartialAlgebra, sentence: HornSentence) -> SatisfactionVerdict:
    """Classical satisfaction; requires every table to be complete."""
    if not algebra.is_total():
        raise ValueError("holds_total needs a total algebra")
    return holds(algebra, sentence)


@dataclass(frozen=True)
class CheckVerdict:
    """Yes, or no with a reason."""

    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def is_weak_subalgebra(p: FinitePartialAlgebra, q: FinitePartialAlgebra) -> CheckVerdict:
    """Carrier containment plus agreement of p's defined entries with q.

    Every entry defined in p must be defined in q with the same value;
    q may define more.  Signatures must coincide as sets.
    """
    if set(p.signature) != set(q.signature):
        raise ValueError("weak subalgebra comparison needs matching signatures")
    if not set(p.carrier) <= set(q.carrier):
        extra = sorted(set(p.carrier) - set(q.carrier))
        return CheckVerdict(False, f"carrier elements {extra} are not in the larger algebra")
    for op, args, value in p.defined_entries():
        other = q.tables.get(op, {}).get(args)
        if other is None:
            return CheckVerdict(False, f"{op} is undefined at {args} in the larger algebra")
        if other != value:
            return CheckVerdict(False, f"{op} at {args} gives {value} versus {other}")
    return CheckVerdict(True)


def check_embedding(p: FinitePartialAlgebra, q: FinitePartialAlgebra, mapping: dict) -> CheckVerdict:
    """Is ``mapping`` an embedding of p into q?

    The map must be total on p's carrier and injective, and every
    defined entry of p must map to a defined entry of q with the
    matching value.  q may interpret extra operation symbols.
    """
    if set(p.signature) - set(q.signature):
        raise ValueError("embedding needs p's signature inside q's")
    missing = [e for e in p.carrier if e not in mapping]
    if missing:
        raise ValueError(f"mapping is not total on the carrier: missing {missing}")
    image = [mapping[e] for e in p.carrier]
    if any(v not in q.carrier for v in image):
        return CheckVerdict(False, "mapping leaves the target carrier")
    if len(set(image)) != len(image):
        return CheckVerdict(False, "mapping is not injective")
    for op, args, value in p.defined_entries():
        target_args = tuple(mapping[a] for a in args)
        other = q.tables.get(op, {}).get(target_args)
        if other is None:
            return CheckVerdict(False, f"{op} is undefined at the image of {args}")
        if other != mapping[value]:
            return CheckVerdict(False, f"{op} at the image of {args} gives {other}, expected {mapping[value]}")
    return CheckVerdict(True)


def search_embedding(p: FinitePartialAlgebra, q: FinitePartialAlgebra):
    """First embedding of p into q, trying p's elements in carrier
    order and images in q's carrier order; None if there is none."""
    if set(p.signature) - set(q.signature):
        raise ValueError("embedding needs p's signature inside q's")
    entries = list(p.defined_entries())
    mapping: dict = {}

    def extend(i: int):
        if i == len(p.carrier):
            yield dict(mapping)
            return
        element = p.carrier[i]
        for target in q.carrier:
            if target in mapping.values():
                continue
            mapping[element] = target
            if _entries_consistent(q, entries, mapping):
                yield from extend(i + 1)
            del mapping[element]

    return next(extend(0), None)


def _entries_consistent(q, entries, mapping) -> bool:
    # check only the entries whose inputs and output are all mapped
    for op, args, value in entries:
        if value not in mapping or any(a not in mapping for a in args):
            continue
        target = q.tables.get(op, {}).get(tuple(mapping[a] for a in args))
        if target is None or target != mapping[value]:
            return False
    return True


@dataclass(frozen=True)
class Presentation:
    """The positive diagram and the distinctness constraints of a
    finite partial algebra, as ground data."""

    diag_plus: tuple  # (op, args, value) triples
    distinct: tuple  # (a, b) pairs, a before b in carrier order

    def __str__(self):
        lines = [
            f"{op}({', '.join(args)}) = {value}" if args else f"{op} = {value}"
            for op, args, value in self.diag_plus
        ]
        lines += [f"{a} != {b}" for a, b in self.distinct]
        return "\n".join(lines)


def presentation(algebra: FinitePartialAlgebra) -> Presentation:
    diag = tuple(algebra.defined_entries())
    pairs = tuple(
        (a, b)
        for i, a in enumerate(algebra.carrier)
        for b in algebra.carrier[i + 1 :]
    )
    return Presentation(diag, pairs)


def format_algebra(algebra: FinitePartialAlgebra) -> str:
    lines = ["carrier: " + " ".join(algebra.carrier)]
    for op, k in algebra.signature:
        lines.append(f"op {op}/{k}:")
        table = algebra.tables.get(op, {})
        for args in itertools.product(algebra.carrier, repeat=k):
            if args in table:
                prefix = " ".join(args) + " " if args else ""
                lines.append(f"{prefix}-> {table[args]}")
    return "\n".join(lines) + "\n"


def parse_algebra(text: str) -> FinitePartialAlgebra:
    """Parse the algebra file format; inverse of format_algebra."""
    carrier: tuple[str, ...] | None = None
    signature: list[tuple[str, int]] = []
    tables: dict[str, dict] = {}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("carrier:"):
            if carrier is not None:
                raise ValueError(f"line {lineno}: second carrier line")
            carrier = tuple(line[len("carrier:") :].split())
            continue
        if line.startswith("op "):
            head = line[3:].rstrip(":")
            name, _, arity = head.partition("/")
            if not name or not arity.isdigit():
                raise ValueError(f"line {lineno}: malformed operation header")
            current = name
            signature.append((name, int(arity)))
            tables[name] = {}
            continue
        if "->" in line:
            if current is None:
                raise ValueError(f"line {lineno}: entry before any operation header")
            left, _, value = line.partition("->")
            args = tuple(left.split())
            value = value.strip()
            arity = dict(signature)[current]
            if len(args) != arity or not value:
                raise ValueError(f"line {lineno}: entry does not match arity {arity}")
            if args in tables[current]:
                raise ValueError(f"line {lineno}: duplicate entry")
            tables[current][args] = value
            continue
        raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if carrier is None:
        raise ValueError("missing carrier line")
    return FinitePartialAlgebra(carrier, tuple(signature), tables)
