"""Boole's partial algebra of classes, end to end.

Terms over {+, -, *, 0, 1}; multilinear normal forms and constituent
expansions; finite partial algebras with strict evaluation and
Horn satisfaction relative to definedness; the power-set class
algebras and their indicator-vector embedding; exhaustive total-model
and embedding search; and symbolic consequence with verifiable
cofactor certificates and two-mode derivation traces.
"""

from .algebra import (
    FinitePartialAlgebra,
    UNDEFINED,
    check_embedding,
    eval_term,
    format_algebra,
    holds,
    holds_total,
    is_weak_subalgebra,
    parse_algebra,
    presentation,
    search_embedding,
)
from .classes import (
    ClassAlgebra,
    IntVector,
    build_pu,
    chi,
    semantic_consequence,
    verify_chi_embedding,
)
from .derivation import (
    Certificate,
    DerivationTrace,
    HAILPERIN,
    SIGMA1,
    TraceStep,
    certify_consequence,
    check_trace,
    format_trace,
    parse_trace,
    verify_certificate,
)
from .errors import CapExceeded
from .horn import (
    Delta,
    FALSUM,
    HornSentence,
    format_theory,
    horn_sentence,
    idempotence_guard,
    identity,
    parse_theory,
    relativize,
)
from .models import (
    EmbedSearchResult,
    embeds_into_mod_bounded,
    enumerate_total_models,
    hailperin_laws,
    search_total_model,
)
from .polynomial import (
    ConstituentExpansion,
    MultilinearPoly,
    boole_oracle,
    expand,
    interpretability,
    normalize,
    unexpand,
)
from .terms import Add, IntLit, Mul, ParseError, Sub, Term, Var, parse, pretty

__all__ = [
    "Add",
    "CapExceeded",
    "Certificate",
    "ClassAlgebra",
    "ConstituentExpansion",
    "Delta",
    "DerivationTrace",
    "EmbedSearchResult",
    "FALSUM",
    "FinitePartialAlgebra",
    "HAILPERIN",
    "HornSentence",
    "IntLit",
    "IntVector",
    "Mul",
    "MultilinearPoly",
    "ParseError",
    "SIGMA1",
    "Sub",
    "Term",
    "TraceStep",
    "UNDEFINED",
    "Var",
    "boole_oracle",
    "build_pu",
    "certify_consequence",
    "check_embedding",
    "check_trace",
    "chi",
    "embeds_into_mod_bounded",
    "enumerate_total_models",
    "eval_term",
    "expand",
    "format_algebra",
    "format_theory",
    "format_trace",
    "hailperin_laws",
    "holds",
    "holds_total",
    "horn_sentence",
    "idempotence_guard",
    "identity",
    "interpretability",
    "is_weak_subalgebra",
    "normalize",
    "parse",
    "parse_algebra",
    "parse_theory",
    "parse_trace",
    "presentation",
    "pretty",
    "relativize",
    "search_embedding",
    "search_total_model",
    "semantic_consequence",
    "unexpand",
    "verify_certificate",
    "verify_chi_embedding",
]
