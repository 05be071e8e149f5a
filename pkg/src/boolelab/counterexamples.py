"""Named fixtures: the small algebras and derivations that show where
symbolic reasoning and partial-algebra semantics come apart.

``intro_algebra`` is the two-element partial algebra whose only sums
are 0+0=0 and 1+1=1.  Both laws x+y = x and x+y = y hold on it (each
is checked only where the sum is defined), yet their equational
consequence x = y fails, so consequence over total algebras does not
transfer.  ``cx_trace`` is the four-step derivation of x = 0 from no
premisses that unrestricted idempotence licenses; its conclusion fails
in every class algebra.
"""

from __future__ import annotations

from .algebra import FinitePartialAlgebra
from .derivation import (
    DeltaIdempotence,
    DerivationTrace,
    IntegerSimplification,
    NoNilpotent,
    TraceStep,
)
from .horn import HornSentence, identity
from .terms import Add, IntLit, Mul, Sub, Var


def intro_algebra() -> FinitePartialAlgebra:
    """Carrier {0, 1}; + defined only at (0,0) and (1,1)."""
    return FinitePartialAlgebra(
        ("0", "1"),
        (("+", 2),),
        {"+": {("0", "0"): "0", ("1", "1"): "1"}},
    )


def max_algebra() -> FinitePartialAlgebra:
    """Total + as maximum on {0, 1}; extends intro_algebra."""
    table = {(a, b): max(a, b) for a in "01" for b in "01"}
    return FinitePartialAlgebra(("0", "1"), (("+", 2),), {"+": table})


def xor_algebra() -> FinitePartialAlgebra:
    """Total + as exclusive or on {0, 1}; disagrees with intro_algebra
    at (1,1)."""
    table = {(a, b): str(int(a) ^ int(b)) for a in "01" for b in "01"}
    return FinitePartialAlgebra(("0", "1"), (("+", 2),), {"+": table})


def intro_laws() -> tuple[HornSentence, HornSentence]:
    """The two absorption laws that hold on intro_algebra."""
    x, y = Var("x"), Var("y")
    return (
        identity(Add(x, y), x, ("x", "y")),
        identity(Add(x, y), y, ("x", "y")),
    )


def intro_collapse() -> HornSentence:
    """x = y, the equational-logic consequence of the two laws."""
    return identity(Var("x"), Var("y"), ("x", "y"))


def cx_trace() -> DerivationTrace:
    """Derive x = 0 from nothing by squaring the term 2x.

    Step 1 applies idempotence to the compound term 2x, which sigma1
    mode admits and hailperin mode rejects; the rest is ring
    bookkeeping and the no-additive-nilpotents rule.
    """
    x = Var("x")
    two_x = Mul(IntLit(2), x)
    four_x = Mul(IntLit(4), x)
    zero = IntLit(0)
    return DerivationTrace(
        premisses=(),
        steps=(
            TraceStep(Mul(two_x, two_x), two_x, DeltaIdempotence(two_x)),
            TraceStep(four_x, two_x, IntegerSimplification(1)),
            TraceStep(two_x, zero, IntegerSimplification(2)),
            TraceStep(x, zero, NoNilpotent(3, 2)),
        ),
    )


def cx_conclusion():
    return (Var("x"), IntLit(0))


def barbara_premisses():
    """All x are y; all y are z, as vanishing differences."""
    x, y, z = Var("x"), Var("y"), Var("z")
    return (
        (Sub(x, Mul(x, y)), IntLit(0)),
        (Sub(y, Mul(y, z)), IntLit(0)),
    )


def barbara_conclusion():
    x, z = Var("x"), Var("z")
    return (Sub(x, Mul(x, z)), IntLit(0))
