"""Command-line interface.

Every command prints a JSON document (or writes it with ``--out``).  Exit
codes: 0 success, 2 bad input, 3 hypothesis not met, 4 a check failed.
"""
from __future__ import annotations

import argparse
import sys

from . import io
from .analysis import check_all
from .errors import (
    ArrangioError,
    HypothesisNotMet,
    MultiplicityTooSmall,
    NotFullRank,
    NotModular,
    NotSupersolvable,
)
from .generators import GeneratorRecipe
from .nbc import OrderedArrangement, equiv_2m_verdict, modular_first_order, quadratic_nbc
from .slopes import slope_theorem_check
from .ssconfig import (
    RefutationCertificate,
    bm_template,
    config_validate,
    realize_or_refute,
    search_classify,
)
from .verify import run_criteria

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_CHECK = 0, 2, 3, 4
_HYPOTHESIS_ERRORS = (HypothesisNotMet, NotSupersolvable, NotFullRank, MultiplicityTooSmall, NotModular)


class _Failed(Exception):
    """Raised by a command after emitting its report, to set exit code 4."""


def _emit(doc, args) -> None:
    text = io.dump_json(doc, args.out, canonical=args.canonical)
    if not args.out:
        print(text)


def _field(args):
    return io.parse_field(args.field) if args.field else None


def _load_arrangement(path, args):
    return io.arrangement_from_json(io.load_json(path), _field(args))


def cmd_analyze(args):
    A = _load_arrangement(args.file, args)
    doc = {"arrangement": A.name or args.file, "field": io.field_to_json(A.spec), "stats": A.stats().to_dict()}
    if args.report:
        io.dump_json(doc, args.report, canonical=args.canonical)
    _emit(doc, args)


def cmd_gen(args):
    params = {}
    if args.name == "boroczky":
        params["m"] = args.m if args.m is not None else 3
    elif args.name == "near-pencil":
        params["n"] = args.n if args.n is not None else 5
    A = GeneratorRecipe(args.name, params).build()
    _emit(io.arrangement_to_json(A), args)


def cmd_check(args):
    A = _load_arrangement(args.file, args)
    report = check_all(A)
    _emit(report.to_dict(), args)
    if not report.ok:
        raise _Failed


def cmd_slopes(args):
    rep = slope_theorem_check(io.points_from_json(io.load_json(args.file)))
    _emit(rep.to_dict(), args)
    if not rep.ok:
        raise _Failed


def cmd_nbc(args):
    A = _load_arrangement(args.file, args)
    oa = modular_first_order(A) if args.order == "modular-first" else OrderedArrangement(A, tuple(range(A.n)))
    if args.order == "modular-first" and A.supersolvable_witness() is None:
        raise NotSupersolvable("modular-first order needs a modular point")
    pairs = quadratic_nbc(oa)
    _emit({"order": list(oa.order), "size": len(pairs), "pairs": [list(p) for p in pairs]}, args)


def cmd_equiv(args):
    verdict = equiv_2m_verdict(_load_arrangement(args.a, args), _load_arrangement(args.b, args))
    _emit(verdict.to_dict(), args)


def cmd_ssconfig(args):
    spec = io.parse_field(args.field or "Q")
    if args.action == "validate":
        cfg = io.ssconfig_from_json(io.load_json(args.config))
        res = config_validate(cfg, require_surjective=args.surjective)
        _emit({"valid": res.valid, "violations": res.violations}, args)
        if not res.valid:
            raise _Failed
    elif args.action == "search":
        if args.m is None:
            raise ArrangioError("search needs --m")
        _emit(search_classify(args.m, args.surjective, args.probe_budget).to_dict(), args)
    elif args.action == "certify-bm":
        if args.m is None:
            raise ArrangioError("certify-bm needs --m")
        _emit(realize_or_refute(bm_template(args.m), spec).to_dict(), args)
    else:
        cfg = io.ssconfig_from_json(io.load_json(args.config))
        result = realize_or_refute(cfg, spec)
        _emit(result.to_dict(), args)
        if isinstance(result, RefutationCertificate):
            raise _Failed


def cmd_verify(args):
    example9 = _load_arrangement(args.example9, args) if args.example9 else None
    results = run_criteria(args.only, example9)
    for r in results:
        print(r.line(), file=sys.stderr)
    _emit({"passed": all(r.passed for r in results), "criteria": [r.to_dict() for r in results]}, args)
    if not all(r.passed for r in results):
        raise _Failed


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="Q, Fp:<p> or cyclotomic:<n>")
    common.add_argument("--out", help="write the JSON report here instead of stdout")
    common.add_argument("--canonical", action="store_true", help="compact, key-sorted JSON")
    common.add_argument("--only", help="substring filter on criterion names")

    p = argparse.ArgumentParser(prog="arrangio", description="Exact analysis of projective line arrangements.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[common], help="singular locus statistics")
    s.add_argument("file")
    s.add_argument("--report")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("gen", parents=[common], help="write a named arrangement")
    s.add_argument("name", choices=["boroczky", "hesse", "fano", "example9", "near-pencil"])
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("check", parents=[common], help="simple-point bounds")
    s.add_argument("file")
    s.add_argument("--all", action="store_true", help="run every applicable check (the default)")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("slopes", parents=[common], help="slope count and the dual arrangement")
    s.add_argument("file")
    s.set_defaults(func=cmd_slopes)

    s = sub.add_parser("nbc", parents=[common], help="quadratic NBC pairs")
    s.add_argument("file")
    s.add_argument("--order", choices=["modular-first", "input"], default="input")
    s.set_defaults(func=cmd_nbc)

    s = sub.add_parser("equiv", parents=[common], help="equivalence of two 2m-line arrangements")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("ssconfig", parents=[common], help="labelled configurations")
    s.add_argument("action", choices=["validate", "search", "certify-bm", "realize"])
    s.add_argument("--config")
    s.add_argument("--m", type=int)
    s.add_argument("--surjective", action="store_true")
    s.add_argument("--probe-budget", type=int)
    s.set_defaults(func=cmd_ssconfig)

    s = sub.add_parser("verify-paper", parents=[common], help="run every quantitative check")
    s.add_argument("--example9", help="arrangement file to use in place of the built-in nine lines")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "action", None) in ("validate", "realize") and not args.config:
        print("error: --config is required", file=sys.stderr)
        return EXIT_INPUT
    try:
        args.func(args)
    except _Failed:
        return EXIT_CHECK
    except _HYPOTHESIS_ERRORS as exc:
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ArrangioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
