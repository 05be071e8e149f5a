"""Problem files: a ground argument plus optional checking directives.

Line-oriented, with '#' comments::

    vars: x y z          # optional, fixes display order
    premiss: x - x*y = 0
    premiss: y - y*z = 0
    conclude: x - x*z = 0
    mode: hailperin      # or sigma1; governs trace checking
    max_n: 3             # universe bound for the semantic check

Exactly one conclude line is required; premiss lines may repeat or be
absent.
"""

from __future__ import annotations

from dataclasses import dataclass

from .derivation import HAILPERIN, MODES
from .horn import Equation, parse_equation


@dataclass(frozen=True)
class Problem:
    premisses: tuple[Equation, ...]
    conclusion: Equation
    vars: tuple[str, ...] | None = None
    mode: str = HAILPERIN
    max_n: int = 3


def parse_problem(text: str) -> Problem:
    premisses = []
    conclusion = None
    vars_decl = None
    mode = HAILPERIN
    max_n = 3
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep:
            raise ValueError(f"line {lineno}: expected 'key: value'")
        key = key.strip()
        value = value.strip()
        try:
            if key == "premiss":
                premisses.append(parse_equation(value))
            elif key == "conclude":
                if conclusion is not None:
                    raise ValueError("second conclude line")
                conclusion = parse_equation(value)
            elif key == "vars":
                vars_decl = tuple(value.split())
            elif key == "mode":
                if value not in MODES:
                    raise ValueError(f"mode must be one of {MODES}")
                mode = value
            elif key == "max_n":
                max_n = int(value)
                if max_n < 1:
                    raise ValueError("max_n must be at least 1")
            else:
                raise ValueError(f"unknown key {key!r}")
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    if conclusion is None:
        raise ValueError("missing conclude line")
    return Problem(tuple(premisses), conclusion, vars_decl, mode, max_n)
