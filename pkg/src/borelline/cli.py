"""Command-line front end.

Four commands, all emitting a single JSON document on stdout with stable key
order; anything human-facing goes to stderr. Exit codes: 0 success, 1 a
verification failed, 2 bad usage or input, 3 the request exceeds what exact
desk-scale computation supports.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .characters import (
    NoStablePattern,
    RationalPower,
    X0Pattern,
    classify_exact,
    extract_pattern,
    f_sequence,
    lucas_criterion,
    nonzero_counts,
    symbolic_from_json,
    symbolic_to_json,
    truncate,
)
from .classify import report, report_to_json, torus_character_from_json
from .digits import ArgumentError, require_prime
from .sl2lab import (
    InducedModule,
    PreconditionError,
    RelationError,
    SPIN_GATE,
    hecke_operators,
    is_irreducible,
    socle_head_report,
)
from .suites import SUITES, run_suites
from .towers import CapabilityError, LEVEL_CAP

USAGE_ERROR = 2
VERIFICATION_ERROR = 1
CAPABILITY_ERROR = 3


def _read_json(path):
    if path == "-":
        raw = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.read()
    return json.loads(raw)


def _check_level(level):
    if level < 1:
        raise ArgumentError("level must be at least 1")
    if level > LEVEL_CAP:
        raise CapabilityError(f"level {level} exceeds the tower cap {LEVEL_CAP}")


def _twist_json(twist):
    return list(twist.residues)


def _pattern_json(pattern):
    if isinstance(pattern, X0Pattern):
        return {
            "stabilized_at": pattern.stabilized_at,
            "level": pattern.level,
            "factors": [
                {"digit": t, "twist": _twist_json(w)} for t, w in pattern.factors
            ],
        }
    if isinstance(pattern, NoStablePattern):
        return {
            "break_level": pattern.break_level,
            "reason": pattern.reason,
            "digit_sums": list(pattern.f_sequence),
            "nonzero_counts": list(pattern.nonzero_counts),
        }
    return None


def _cmd_verify(args):
    names = args.suites or None
    if names:
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise ArgumentError(
                f"unknown suites {unknown}; choose from: {', '.join(SUITES)}"
            )
    return run_suites(names, p_filter=args.p)


def _cmd_classify(args):
    _check_level(args.level)
    obj = _read_json(args.input)
    datum, tchar = torus_character_from_json(obj)
    rep = report(datum, tchar, args.p, args.level)
    return report_to_json(rep)


def _cmd_char_inspect(args):
    _check_level(args.level)
    sc = symbolic_from_json(_read_json(args.input))
    tc = truncate(sc, args.p, args.level)
    pattern = extract_pattern(tc)
    cls = classify_exact(sc, args.p, args.level)
    searches = []
    for r in range(1, args.level):
        hit = lucas_criterion(tc, r)
        searches.append(
            {"r": r, "found": hit.found, "s": hit.s, "k": hit.k}
        )
    return {
        "schema": "v1",
        "p": args.p,
        "level": args.level,
        "character": symbolic_to_json(sc),
        "residues": list(tc.residues),
        "digit_sums": list(f_sequence(tc)),
        "nonzero_counts": list(nonzero_counts(tc)),
        "pattern": _pattern_json(pattern) if isinstance(pattern, X0Pattern) else None,
        "no_pattern": _pattern_json(pattern) if isinstance(pattern, NoStablePattern) else None,
        "bounded": cls.bounded,
        "note": cls.note,
        "lucas": searches,
    }


def _cmd_lab(args):
    if (args.char is None) == (args.power is None):
        raise ArgumentError("give exactly one of --char or --power")
    if args.char is not None:
        sc = symbolic_from_json(_read_json(args.char))
    else:
        sc = RationalPower(args.power)
    theta = truncate(sc, args.p, args.a)
    module = InducedModule(args.p, args.a, theta)
    out = {
        "schema": "v1",
        "p": args.p,
        "a": args.a,
        "q": module.q,
        "dim": module.dim,
        "m": module.m,
        "character": symbolic_to_json(sc),
        "relations": "ok",
    }
    verdict = is_irreducible(
        module, gate=args.gate, randomized=args.randomized, seed=args.seed,
        trials=args.trials,
    )
    out["whole_irreducible"] = {
        "irreducible": verdict.irreducible,
        "mode": verdict.mode,
        "proof": verdict.proof,
    }
    if module.m == 0:
        ops = hecke_operators(module)
        y_full, y_empty = ops.idempotent_split()
        v_full = is_irreducible(module, y_full, gate=args.gate,
                                randomized=args.randomized, seed=args.seed,
                                trials=args.trials)
        v_empty = is_irreducible(module, y_empty, gate=args.gate,
                                 randomized=args.randomized, seed=args.seed,
                                 trials=args.trials)
        out["hecke"] = {
            "dims": [y_full.dim, y_empty.dim],
            "irreducible": [v_full.irreducible, v_empty.irreducible],
            "proof": [v_full.proof, v_empty.proof],
        }
        out["ok"] = (
            y_full.dim == 1 and y_empty.dim == module.q
            and v_full.irreducible and v_empty.irreducible
        )
    else:
        rep = socle_head_report(module)
        out["socle_head"] = {
            "socle_dim": rep.socle.dim if rep.socle else None,
            "socle_ok": rep.socle_ok,
            "maximal_ok": rep.maximal_ok,
            "head_dim": rep.head_dim,
            "digit_product": rep.head_digit_product,
        }
        out["ok"] = (
            rep.socle_ok and rep.maximal_ok
            and rep.head_dim == rep.head_digit_product
        )
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borelline",
        description="Exact digit combinatorics and finite-level module checks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run named verification suites")
    p_verify.add_argument("suites", nargs="*", metavar="SUITE",
                          help=f"one of: {', '.join(SUITES)} (default: all)")
    p_verify.add_argument("--p", type=int, default=None, help="restrict grids to one prime")
    p_verify.add_argument("--out", help="also write the JSON document to this file")
    p_verify.set_defaults(handler=_cmd_verify)

    p_classify = sub.add_parser("classify", help="classify a torus character with a stable line")
    p_classify.add_argument("input", help="JSON file with cartan and restrictions, or -")
    p_classify.add_argument("--p", type=int, required=True, help="the prime")
    p_classify.add_argument("--level", type=int, default=LEVEL_CAP,
                            help=f"tower level (default {LEVEL_CAP})")
    p_classify.add_argument("--out", help="also write the JSON document to this file")
    p_classify.set_defaults(handler=_cmd_classify)

    p_char = sub.add_parser("char-inspect", help="residues, digit data, and pattern of a character")
    p_char.add_argument("input", help="JSON file with a symbolic character, or -")
    p_char.add_argument("--p", type=int, required=True, help="the prime")
    p_char.add_argument("--level", type=int, default=LEVEL_CAP,
                        help=f"tower level (default {LEVEL_CAP})")
    p_char.add_argument("--out", help="also write the JSON document to this file")
    p_char.set_defaults(handler=_cmd_char_inspect)

    p_lab = sub.add_parser("lab", help="finite-level induced module report")
    p_lab.add_argument("--p", type=int, required=True, help="the prime")
    p_lab.add_argument("--a", type=int, required=True, help="group level: the field has p^(a!) elements")
    p_lab.add_argument("--char", help="JSON file with a symbolic character, or -")
    p_lab.add_argument("--power", type=int, help="shortcut for the character t -> t^power")
    p_lab.add_argument("--gate", type=int, default=SPIN_GATE,
                       help="largest |F|^dim for exhaustive spinning")
    p_lab.add_argument("--randomized", action="store_true",
                       help="allow a seeded non-proof check past the gate")
    p_lab.add_argument("--seed", type=int, default=None, help="seed for --randomized")
    p_lab.add_argument("--trials", type=int, default=16, help="sample count for --randomized")
    p_lab.add_argument("--out", help="also write the JSON document to this file")
    p_lab.set_defaults(handler=_cmd_lab)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.p is not None:
            require_prime(args.p)
        obj = args.handler(args)
    except (ArgumentError, PreconditionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    except (OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return USAGE_ERROR
    except CapabilityError as err:
        print(f"capability: {err}", file=sys.stderr)
        return CAPABILITY_ERROR
    except RelationError as err:
        print(f"verification: {err}", file=sys.stderr)
        return VERIFICATION_ERROR
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0 if obj.get("ok", True) else VERIFICATION_ERROR


if __name__ == "__main__":
    sys.exit(main())
