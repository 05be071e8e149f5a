"""Exhaustive search for total models of Horn theories, and bounded
embedding search into those models.

The enumeration order is canonical and documented: operations are
ordered constants first, then the rest, each group by first occurrence
in the theory (a partial algebra's own signature, when one is supplied,
comes ahead of theory-only symbols); within an operation the argument
tuples run row-major in carrier order; candidate values are tried in
carrier order.  The first completed table in depth-first order is the
model returned, which makes every search result reproducible.

Integer literals outside {0, 1} are desugared into repeated addition of
the unit constant before searching, since a total model interprets only
the ring signature.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import FinitePartialAlgebra, search_embedding
from .errors import CapExceeded
from .horn import FALSUM, Delta, HornSentence, horn_sentence, identity
from .terms import Add, IntLit, Mul, Sub, Term, Var

MAX_MODEL_SIZE = 4


def _walk_ops(t: Term, out: list):
    """Record (name, arity) first occurrences, preorder, literals >= 2
    contributing the unit constant and addition."""
    if isinstance(t, IntLit):
        if t.value in (0, 1):
            entry = (str(t.value), 0)
            if entry not in out:
                out.append(entry)
        else:
            for entry in (("1", 0), ("+", 2)):
                if entry not in out:
                    out.append(entry)
        return
    if isinstance(t, (Add, Sub, Mul)):
        name = {Add: "+", Sub: "-", Mul: "*"}[type(t)]
        entry = (name, 2)
        if entry not in out:
            out.append(entry)
        _walk_ops(t.left, out)
        _walk_ops(t.right, out)


def signature_of(sentences, base=()) -> tuple[tuple[str, int], ...]:
    """Operation symbols used by the sentences, constants first, in
    first-occurrence order; ``base`` symbols are kept in front."""
    found: list[tuple[str, int]] = list(base)
    for s in sentences:
        for t in s.all_terms():
            _walk_ops(t, found)
    constants = [e for e in found if e[1] == 0]
    rest = [e for e in found if e[1] != 0]
    return tuple(constants + rest)


def _desugar(t: Term) -> Term:
    if isinstance(t, IntLit) and t.value not in (0, 1):
        acc: Term = IntLit(1)
        for _ in range(t.value - 1):
            acc = Add(acc, IntLit(1))
        return acc
    if isinstance(t, (Add, Sub, Mul)):
        return type(t)(_desugar(t.left), _desugar(t.right))
    return t


def _ground(t: Term, assignment: dict):
    """Compile a term against an element assignment: int leaves for
    variables, ('c', name) for constants, ('f', op, kids) for nodes."""
    if isinstance(t, Var):
        return assignment[t.name]
    if isinstance(t, IntLit):
        return ("c", str(t.value))
    op = {Add: "+", Sub: "-", Mul: "*"}[type(t)]
    return ("f", op, (_ground(t.left, assignment), _ground(t.right, assignment)))


def _eval_ground(g, tables):
    if isinstance(g, int):
        return g
    if g[0] == "c":
        return tables[g[1]].get(())
    a = _eval_ground(g[2][0], tables)
    if a is None:
        return None
    b = _eval_ground(g[2][1], tables)
    if b is None:
        return None
    return tables[g[1]].get((a, b))


class _Instance:
    """One ground instance of a sentence, tracked during search until
    the partial tables decide it."""

    __slots__ = ("ops", "antecedents", "consequent")

    def __init__(self, ops, antecedents, consequent):
        self.ops = ops
        self.antecedents = antecedents
        self.consequent = consequent

    def check(self, tables):
        """True = satisfied for good, False = violated, None = open."""
        if self.consequent is not None:
            lv = _eval_ground(self.consequent[0], tables)
            rv = _eval_ground(self.consequent[1], tables)
            if lv is not None and rv is not None and lv == rv:
                return True
        else:
            lv = rv = None
        open_antecedent = False
        for gl, gr in self.antecedents:
            av = _eval_ground(gl, tables)
            bv = _eval_ground(gr, tables)
            if av is None or bv is None:
                open_antecedent = True
            elif av != bv:
                return True
        if open_antecedent:
            return None
        if self.consequent is None:
            return False
        if lv is None or rv is None:
            return None
        return False  # antecedents all true, consequent defined and false


def _ops_of_ground(g, out: set):
    if isinstance(g, int):
        return
    if g[0] == "c":
        out.add(g[1])
        return
    out.add(g[1])
    _ops_of_ground(g[2][0], out)
    _ops_of_ground(g[2][1], out)


def _compile_instances(sentences, size) -> list[_Instance]:
    instances = []
    for s in sentences:
        desugared_ante = tuple(
            (_desugar(l), _desugar(r)) for l, r in s.antecedents
        )
        desugared_cons = (
            None
            if s.consequent is FALSUM
            else (_desugar(s.consequent[0]), _desugar(s.consequent[1]))
        )
        for values in itertools.product(range(size), repeat=len(s.vars)):
            assignment = dict(zip(s.vars, values))
            ante = tuple(
                (_ground(l, assignment), _ground(r, assignment))
                for l, r in desugared_ante
            )
            cons = (
                None
                if desugared_cons is None
                else (
                    _ground(desugared_cons[0], assignment),
                    _ground(desugared_cons[1], assignment),
                )
            )
            ops: set = set()
            for gl, gr in ante:
                _ops_of_ground(gl, ops)
                _ops_of_ground(gr, ops)
            if cons is not None:
                _ops_of_ground(cons[0], ops)
                _ops_of_ground(cons[1], ops)
            instances.append(_Instance(frozenset(ops), ante, cons))
    return instances


def enumerate_total_models(sentences, size: int, base_signature=()):
    """Yield every total model of the sentences with the given carrier
    size, in the canonical order described in the module docstring.

    Carrier elements are named e0, e1, ...  Sentences may be Horn
    sentences over +, -, *, 0, 1 in any mix.
    """
    signature = signature_of(sentences, base=base_signature)
    slots = []
    for op, k in signature:
        for args in itertools.product(range(size), repeat=k):
            slots.append((op, args))
    tables: dict[str, dict] = {op: {} for op, _ in signature}

    # settle instances that need no table at all (bare variable or
    # element equations); a violated one rules out every table
    pending = []
    for inst in _compile_instances(sentences, size):
        r = inst.check(tables)
        if r is False:
            return
        if r is None:
            pending.append(inst)

    names = tuple(f"e{i}" for i in range(size))

    def snapshot() -> FinitePartialAlgebra:
        named = {
            op: {
                tuple(names[a] for a in args): names[v]
                for args, v in table.items()
            }
            for op, table in tables.items()
        }
        return FinitePartialAlgebra(names, signature, named)

    def fill(i: int, open_instances):
        if i == len(slots):
            yield snapshot()
            return
        op, args = slots[i]
        for value in range(size):
            tables[op][args] = value
            still_open = []
            violated = False
            for inst in open_instances:
                if op not in inst.ops:
                    still_open.append(inst)
                    continue
                r = inst.check(tables)
                if r is False:
                    violated = True
                    break
                if r is None:
                    still_open.append(inst)
            if not violated:
                yield from fill(i + 1, still_open)
            del tables[op][args]

    yield from fill(0, pending)


def search_total_model(sentences, size: int, max_size: int = MAX_MODEL_SIZE):
    """First total model of the sentences at the given carrier size, or
    None; size is capped (default 4)."""
    if size < 1:
        raise ValueError("carrier size must be at least 1")
    if size > max_size:
        raise CapExceeded(f"model size {size} exceeds the limit of {max_size}")
    return next(enumerate_total_models(sentences, size), None)


@dataclass(frozen=True)
class EmbedSearchResult:
    """A model-and-embedding witness, or the exhausted bound."""

    max_size: int
    model: FinitePartialAlgebra | None = None
    mapping: dict | None = None

    @property
    def found(self) -> bool:
        return self.model is not None

    def __bool__(self):
        return self.found


def embeds_into_mod_bounded(
    p: FinitePartialAlgebra, sentences, max_size: int, cap: int = MAX_MODEL_SIZE
) -> EmbedSearchResult:
    """Search for a total model of the sentences that p embeds into.

    Model sizes run 1..max_size; within a size, models come in the
    canonical enumeration order and the embedding search tries images
    lexicographically, so the witness is deterministic.  The models
    interpret p's signature together with any extra theory symbols.
    """
    if max_size > cap:
        raise CapExceeded(f"model size bound {max_size} exceeds the limit of {cap}")
    for size in range(1, max_size + 1):
        if size < len(p.carrier):
            continue  # no injection exists
        for q in enumerate_total_models(sentences, size, base_signature=p.signature):
            mapping = search_embedding(p, q)
            if mapping is not None:
                return EmbedSearchResult(max_size, q, mapping)
    return EmbedSearchResult(max_size)


def _repeated_sum(var: Var, n: int) -> Term:
    acc: Term = var
    for _ in range(n - 1):
        acc = Add(acc, var)
    return acc


def hailperin_laws(nilpotent_bound: int = MAX_MODEL_SIZE) -> tuple[HornSentence, ...]:
    """The ring laws Boole's symbolic reasoning runs on.

    Commutative-ring-with-unity identities over {+, -, *, 0, 1} with
    binary subtraction, the exclusion of additive nilpotents (nx = 0
    implies x = 0) for n up to ``nilpotent_bound``, and 0 != 1.  The
    nilpotent scheme is an infinite family; truncating at the model
    size bound is enough because a total model of size k gives its unit
    an additive order of at most k.
    """
    x, y, z = Var("x"), Var("y"), Var("z")
    laws = [
        identity(Add(x, y), Add(y, x)),
        identity(Add(Add(x, y), z), Add(x, Add(y, z))),
        identity(Add(x, IntLit(0)), x),
        identity(Add(Sub(x, y), y), x),
        identity(Sub(Add(x, y), y), x),
        identity(Mul(x, y), Mul(y, x)),
        identity(Mul(Mul(x, y), z), Mul(x, Mul(y, z))),
        identity(Mul(x, IntLit(1)), x),
        identity(Mul(x, Add(y, z)), Add(Mul(x, y), Mul(x, z))),
    ]
    for n in range(2, nilpotent_bound + 1):
        laws.append(
            horn_sentence(((_repeated_sum(x, n), IntLit(0)),), (x, IntLit(0)))
        )
    laws.append(horn_sentence(((IntLit(0), IntLit(1)),), FALSUM))
    return tuple(laws)
