"""Command line interface.

Subcommands: normalize, expand, interpret, check, embed, model-search,
counterexample, theorem-demo.  Exit codes: 0 when the query comes back
affirmative, 1 when it comes back negative, 2 for usage or format
errors, 3 when a size cap is exceeded.  ``--json`` switches the report
to a JSON document validated against the shipped schema (boolelab/1);
reports are deterministic apart from the timing field.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources

from . import counterexamples as cx
from .algebra import format_algebra, holds, holds_total
from .classes import build_pu, semantic_consequence, verify_chi_embedding
from .derivation import (
    HAILPERIN,
    SIGMA1,
    certify_consequence,
    check_trace,
    format_trace,
    parse_trace,
    verify_certificate,
)
from .errors import CapExceeded
from .horn import format_equation, parse_theory
from .models import embeds_into_mod_bounded, enumerate_total_models, search_total_model
from .polynomial import boole_oracle, expand, interpretability, normalize, INTERPRETABLE
from .problems import parse_problem
from .terms import ParseError, parse, pretty

DEFAULT_MAX_VARS = 20
DEFAULT_MAX_UNIVERSE = 5
DEFAULT_MAX_MODEL_SIZE = 4


def _witness_str(witness: dict | None) -> str:
    if witness is None:
        return ""
    return ", ".join(f"{k} -> {v}" for k, v in sorted(witness.items()))


def _bits(vertex) -> str:
    return "".join(str(b) for b in vertex) if vertex else "()"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolelab",
        description="Boole's partial algebra of classes, with receipts.",
    )
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument(
        "--max-vars",
        type=int,
        default=None,
        help="variable cap for vertex enumeration (default 20)",
    )
    parser.add_argument(
        "--max-universe",
        type=int,
        default=None,
        help="universe size cap for class algebras (default 5)",
    )
    parser.add_argument(
        "--max-model-size",
        type=int,
        default=None,
        help="carrier size cap for model search (default 4)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="multilinear normal form of a term")
    p.add_argument("term")

    p = sub.add_parser("expand", help="constituent coefficients of a term")
    p.add_argument("term")

    p = sub.add_parser("interpret", help="is the term a class under every reading?")
    p.add_argument("term")

    p = sub.add_parser("check", help="check a consequence problem file")
    p.add_argument("problem")
    p.add_argument(
        "--mode",
        choices=("oracle", "certificate", "semantic", "all"),
        default="all",
    )
    p.add_argument("--trace", default=None, help="derivation trace file to check")

    p = sub.add_parser("embed", help="verify the indicator-vector embedding")
    p.add_argument("--boole", type=int, required=True, metavar="N", help="universe size")

    p = sub.add_parser("model-search", help="search for a total model of a theory")
    p.add_argument("theory")
    p.add_argument("--size", type=int, required=True)

    p = sub.add_parser("counterexample", help="replay a stock counterexample")
    p.add_argument("which", choices=("intro", "cx"))

    sub.add_parser("theorem-demo", help="both directions of the transfer principle")
    return parser


def _env_int(name: str, fallback: int) -> int:
    import os

    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        return fallback


def _caps(args) -> dict:
    return {
        "max_vars": args.max_vars
        if args.max_vars is not None
        else _env_int("BOOLELAB_MAX_VARS", DEFAULT_MAX_VARS),
        "max_universe": args.max_universe
        if args.max_universe is not None
        else _env_int("BOOLELAB_MAX_UNIVERSE", DEFAULT_MAX_UNIVERSE),
        "max_model_size": args.max_model_size
        if args.max_model_size is not None
        else _env_int("BOOLELAB_MAX_MODEL_SIZE", DEFAULT_MAX_MODEL_SIZE),
    }


def _cmd_normalize(args, caps):
    p = normalize(parse(args.term))
    lines = [f"term: {args.term}", f"normal form: {p}"]
    data = {
        "term": args.term,
        "normal_form": str(p),
        "vars": list(p.vars),
        "records": p.to_records(),
    }
    return 0, lines, data


def _cmd_expand(args, caps):
    p = normalize(parse(args.term))
    e = expand(p)
    lines = [f"term: {args.term}", "vars: " + " ".join(e.vars)]
    coeff_rows = []
    for v in e.vertices():
        lines.append(f"{_bits(v)}: {e.coeff_at[v]}")
        coeff_rows.append({"vertex": list(v), "coeff": e.coeff_at[v]})
    data = {"term": args.term, "vars": list(e.vars), "coefficients": coeff_rows}
    return 0, lines, data


def _cmd_interpret(args, caps):
    p = normalize(parse(args.term))
    verdict = interpretability(p)
    lines = [f"term: {args.term}", f"normal form: {p}", f"verdict: {verdict.kind}"]
    for v in verdict.bad_vertices:
        lines.append(f"bad constituent {_bits(v)}: coefficient {expand(p).coeff_at[v]}")
    data = {
        "term": args.term,
        "verdict": verdict.kind,
        "bad_vertices": [list(v) for v in verdict.bad_vertices],
    }
    code = 0 if verdict.kind == INTERPRETABLE else 1
    return code, lines, data


def _cmd_check(args, caps):
    with open(args.problem) as fh:
        problem = parse_problem(fh.read())
    lines = [f"problem: {args.problem}"]
    for eq in problem.premisses:
        lines.append(f"premiss: {format_equation(eq)}")
    lines.append(f"conclusion: {format_equation(problem.conclusion)}")
    data = {
        "premisses": [format_equation(eq) for eq in problem.premisses],
        "conclusion": format_equation(problem.conclusion),
        "mode": args.mode,
        "verdicts": {},
    }
    affirmative = []
    symbolic = []
    want = (
        ("oracle", "certificate", "semantic") if args.mode == "all" else (args.mode,)
    )
    oracle = None
    if "oracle" in want:
        oracle = boole_oracle(
            problem.premisses, problem.conclusion, max_vars=caps["max_vars"]
        )
        tail = f" at {_witness_str(oracle.witness)}" if not oracle.valid else ""
        lines.append(f"oracle: {'valid' if oracle.valid else 'invalid'}{tail}")
        data["verdicts"]["oracle"] = {
            "valid": oracle.valid,
            "witness": oracle.witness,
        }
        affirmative.append(oracle.valid)
        symbolic.append(oracle.valid)
    if "certificate" in want:
        cert = certify_consequence(
            problem.premisses, problem.conclusion, max_vars=caps["max_vars"]
        )
        if cert is None:
            lines.append("certificate: none (oracle rejects)")
            data["verdicts"]["certificate"] = {"produced": False}
            affirmative.append(False)
            symbolic.append(False)
        else:
            checked = verify_certificate(problem.premisses, problem.conclusion, cert)
            state = "verified" if checked.verified else "REJECTED"
            lines.append(f"certificate: {state} (n={cert.n})")
            for j, cof in enumerate(cert.cofactors, 1):
                lines.append(f"cofactor {j}: {cof}")
            data["verdicts"]["certificate"] = {
                "produced": True,
                "verified": checked.verified,
                **cert.to_json_dict(),
            }
            affirmative.append(checked.verified)
            symbolic.append(checked.verified)
    semantic = None
    if "semantic" in want:
        semantic = semantic_consequence(
            problem.premisses,
            problem.conclusion,
            max_n=problem.max_n,
            cap=caps["max_universe"],
        )
        if semantic.valid:
            lines.append(f"semantic: valid (universe sizes 1..{semantic.max_n})")
        else:
            lines.append(
                f"semantic: invalid at n={semantic.witness_n}"
                f" with {_witness_str(semantic.witness)}"
            )
        data["verdicts"]["semantic"] = {
            "valid": semantic.valid,
            "max_n": semantic.max_n,
            "witness_n": semantic.witness_n,
            "witness": semantic.witness,
        }
        affirmative.append(semantic.valid)
    if args.trace is not None:
        with open(args.trace) as fh:
            trace = parse_trace(fh.read(), premisses=problem.premisses)
        verdict = check_trace(trace, problem.mode)
        if verdict.accepted:
            lines.append(f"trace ({problem.mode}): accepted")
        else:
            lines.append(
                f"trace ({problem.mode}): rejected at step {verdict.step}: {verdict.reason}"
            )
        data["verdicts"]["trace"] = {
            "mode": problem.mode,
            "accepted": verdict.accepted,
            "step": verdict.step,
            "reason": verdict.reason,
        }
        affirmative.append(verdict.accepted)
        symbolic.append(verdict.accepted)
    if semantic is not None and any(v != semantic.valid for v in symbolic):
        lines.append(
            "note: the symbolic and the class-algebra verdicts disagree;"
            " the symbolic calculus is not sound for partial class semantics"
        )
        data["disagreement"] = True
    return (0 if all(affirmative) else 1), lines, data


def _cmd_embed(args, caps):
    verdict = verify_chi_embedding(args.boole, max_n=caps["max_universe"])
    if verdict.ok:
        lines = [
            f"universe size: {args.boole}",
            f"indicator embedding: verified ({verdict.entries_checked} entries)",
        ]
    else:
        lines = [
            f"universe size: {args.boole}",
            f"indicator embedding: FAILED ({verdict.failing})",
        ]
    data = {
        "n": args.boole,
        "ok": verdict.ok,
        "entries_checked": verdict.entries_checked,
        "failing": verdict.failing,
    }
    return (0 if verdict.ok else 1), lines, data


def _cmd_model_search(args, caps):
    with open(args.theory) as fh:
        sentences = parse_theory(fh.read())
    model = search_total_model(sentences, args.size, max_size=caps["max_model_size"])
    lines = [f"theory: {args.theory}", f"size: {args.size}"]
    if model is None:
        lines.append("no total model of this size")
        data = {"size": args.size, "found": False}
        return 1, lines, data
    lines.append("model:")
    lines.extend(format_algebra(model).rstrip("\n").splitlines())
    data = {"size": args.size, "found": True, "model": format_algebra(model)}
    return 0, lines, data


def _cmd_counterexample(args, caps):
    if args.which == "intro":
        return _counterexample_intro()
    return _counterexample_cx(caps)


def _counterexample_intro():
    algebra = cx.intro_algebra()
    law1, law2 = cx.intro_laws()
    collapse = cx.intro_collapse()
    v1 = holds(algebra, law1)
    v2 = holds(algebra, law2)
    v3 = holds(algebra, collapse)
    lines = ["counterexample: intro", "algebra:"]
    lines.extend(format_algebra(algebra).rstrip("\n").splitlines())
    lines.append(f"law {law1}: {'holds' if v1.holds else 'fails'}")
    lines.append(f"law {law2}: {'holds' if v2.holds else 'fails'}")
    tail = f" at {_witness_str(v3.witness)}" if not v3.holds else ""
    lines.append(f"law {collapse}: {'holds' if v3.holds else 'fails'}{tail}")
    lines.append(
        "note: both defining laws hold where defined, yet their equational"
        " consequence x = y fails on the partial algebra"
    )
    expected = v1.holds and v2.holds and not v3.holds and v3.witness == {
        "x": "0",
        "y": "1",
    }
    data = {
        "which": "intro",
        "laws": [
            {"sentence": str(law1), "holds": v1.holds, "witness": v1.witness},
            {"sentence": str(law2), "holds": v2.holds, "witness": v2.witness},
            {"sentence": str(collapse), "holds": v3.holds, "witness": v3.witness},
        ],
        "reproduced": expected,
    }
    return (0 if expected else 1), lines, data


def _counterexample_cx(caps):
    trace = cx.cx_trace()
    sigma1 = check_trace(trace, SIGMA1)
    hailperin = check_trace(trace, HAILPERIN)
    conclusion = cx.cx_conclusion()
    semantic = semantic_consequence(
        (), conclusion, max_n=1, cap=caps["max_universe"]
    )
    pu = build_pu(1, caps["max_universe"])
    lines = [
        "counterexample: cx",
        "mode sigma1 admits idempotence on arbitrary terms and is unsound for class algebras",
        "trace:",
    ]
    lines.extend("  " + l for l in format_trace(trace).rstrip("\n").splitlines())
    lines.append(f"sigma1 check: {'accepted' if sigma1.accepted else 'rejected'}")
    if hailperin.accepted:
        lines.append("hailperin check: accepted")
    else:
        lines.append(
            f"hailperin check: rejected at step {hailperin.step}: {hailperin.reason}"
        )
    lines.append(f"conclusion: {format_equation(conclusion)}")
    if semantic.valid:
        lines.append("semantic check: valid")
    else:
        lines.append(
            f"semantic check: invalid at n={semantic.witness_n}"
            f" with {_witness_str(semantic.witness)}"
            f" (the universe itself)"
        )
    lines.append(
        "note: the sigma1 derivation is accepted symbolically, but its"
        " conclusion fails in the class algebras"
    )
    expected = (
        sigma1.accepted
        and not hailperin.accepted
        and hailperin.step == 1
        and not semantic.valid
        and semantic.witness_n == 1
        and semantic.witness == {"x": pu.universe_name}
    )
    data = {
        "which": "cx",
        "trace": format_trace(trace),
        "sigma1": {"accepted": sigma1.accepted},
        "hailperin": {
            "accepted": hailperin.accepted,
            "step": hailperin.step,
            "reason": hailperin.reason,
        },
        "conclusion": format_equation(conclusion),
        "semantic": {
            "valid": semantic.valid,
            "witness_n": semantic.witness_n,
            "witness": semantic.witness,
        },
        "reproduced": expected,
    }
    return (0 if expected else 1), lines, data


def _cmd_theorem_demo(args, caps):
    lines = ["theorem-demo"]
    data: dict = {"chi": [], "principles_failure": {}}
    all_ok = True

    lines.append("embedding direction: class algebras land in integer-vector rings")
    for n in (1, 2, 3):
        verdict = verify_chi_embedding(n, max_n=caps["max_universe"])
        all_ok = all_ok and verdict.ok
        state = "verified" if verdict.ok else f"FAILED ({verdict.failing})"
        lines.append(
            f"  indicator embedding n={n}: {state} ({verdict.entries_checked} entries)"
        )
        data["chi"].append(
            {"n": n, "ok": verdict.ok, "entries": verdict.entries_checked}
        )

    lines.append("failure direction: holding laws without an embedding do not transfer")
    algebra = cx.intro_algebra()
    laws = cx.intro_laws()
    sigma = cx.intro_collapse()
    result = embeds_into_mod_bounded(
        algebra, laws, caps["max_model_size"], cap=caps["max_model_size"]
    )
    if result.found:
        lines.append("  embedding search: found one (unexpected)")
        all_ok = False
    else:
        lines.append(f"  embedding search: none up to size {result.max_size}")
    model_count = 0
    sigma_everywhere = True
    for size in range(1, caps["max_model_size"] + 1):
        for model in enumerate_total_models(laws, size, base_signature=algebra.signature):
            model_count += 1
            if not holds_total(model, sigma).holds:
                sigma_everywhere = False
    lines.append(
        f"  total models of the two laws up to size {caps['max_model_size']}:"
        f" {model_count}; x = y holds in {'all' if sigma_everywhere else 'NOT all'}"
    )
    on_partial = holds(algebra, sigma)
    tail = f" at {_witness_str(on_partial.witness)}" if not on_partial.holds else ""
    lines.append(
        f"  on the partial algebra: x = y {'holds' if on_partial.holds else 'fails'}{tail}"
    )
    all_ok = all_ok and not result.found and sigma_everywhere and not on_partial.holds
    data["principles_failure"] = {
        "embedding_found": result.found,
        "max_size": result.max_size,
        "total_models": model_count,
        "sigma_holds_in_all_models": sigma_everywhere,
        "sigma_fails_on_partial": not on_partial.holds,
        "witness": on_partial.witness,
    }
    lines.append(
        "note: consequence transfers through an embedding into total models,"
        " and only through one"
    )
    return (0 if all_ok else 1), lines, data


_HANDLERS = {
    "normalize": _cmd_normalize,
    "expand": _cmd_expand,
    "interpret": _cmd_interpret,
    "check": _cmd_check,
    "embed": _cmd_embed,
    "model-search": _cmd_model_search,
    "counterexample": _cmd_counterexample,
    "theorem-demo": _cmd_theorem_demo,
}


def _load_schema() -> dict:
    with resources.files("boolelab").joinpath("report.schema.json").open() as fh:
        return json.load(fh)


def run(argv=None) -> int:
    """Execute one CLI invocation and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    start = time.perf_counter()
    try:
        code, lines, data = _HANDLERS[args.command](args, _caps(args))
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    if args.json:
        report = {
            "schema": "boolelab/1",
            "command": args.command,
            "status": "ok",
            "exit_code": code,
            "data": data,
            "timing_ms": round(elapsed_ms, 3),
        }
        import jsonschema

        jsonschema.validate(report, _load_schema())
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)
        print(f"time: {elapsed_ms:.1f} ms")
    return code


def main() -> None:
    sys.exit(run())
