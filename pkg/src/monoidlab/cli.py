"""Command-line frontend.

Exit codes: 0 on success / HOLDS / all claims passing, 1 on FAILS or any
failing claim, 2 on usage or parse errors, 3 on budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import BudgetExceededError, ParseError, WorkbenchError
from .identities import (
    DEFAULT_MATCH_BUDGET,
    DEFAULT_TABLE_BUDGET,
    HOLDS,
    check_rees,
    check_table,
    match_pattern,
    parse_identity,
)
from .monoid import from_presentation, preset
from .rees import parse_word_set, rees_quotient
from .verify import (
    VerifyConfig,
    enumerate_small_rees,
    run_claims,
    substitution_to_dict,
)
from .words import INFINITY, depth_map, generate_wn, parse_word


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _cmd_rees(args) -> int:
    q = rees_quotient(parse_word_set(args.wordset))
    if args.json:
        _print_json(q.monoid.to_json_dict())
        return 0
    print(f"order {q.order}")
    labels = [q.monoid.label_text(i) for i in range(q.order)]
    width = max(len(l) for l in labels)
    header = " " * (width + 2) + " ".join(l.rjust(width) for l in labels)
    print(header)
    for i, row in enumerate(q.monoid.table):
        cells = " ".join(labels[v].rjust(width) for v in row)
        print(f"{labels[i].rjust(width)} | {cells}")
    return 0


def _cmd_depth(args) -> int:
    w = parse_word(args.word)
    depths = depth_map(w)
    ordered = sorted(depths.items(), key=lambda kv: kv[0].sort_key())
    if args.json:
        _print_json({str(l): ("inf" if d == INFINITY else d) for l, d in ordered})
        return 0
    for letter, d in ordered:
        print(f"{letter}\t{'inf' if d == INFINITY else d}")
    return 0


def _cmd_wn(args) -> int:
    print(generate_wn(args.n))
    return 0


def _resolve_monoid(spec: str):
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ParseError(f"monoid spec needs a kind prefix, got {spec!r}", 0)
    if kind == "rees":
        word_set = parse_word_set(rest)
        return word_set, rees_quotient(word_set)
    if kind == "preset":
        return None, from_presentation(preset(rest))
    raise ParseError(f"unknown monoid kind {kind!r} (use rees: or preset:)", 0)


def _outcome_dict(outcome, monoid) -> dict:
    witness = None
    if outcome.witness is not None:
        witness = substitution_to_dict(outcome.witness, monoid)
    return {
        "status": outcome.status,
        "witness": witness,
        "evaluations": outcome.evaluations,
    }


def _cmd_check(args) -> int:
    word_set, monoid = _resolve_monoid(args.monoid)
    ident = parse_identity(args.identity)
    method = args.method
    if method in ("rees", "both") and word_set is None:
        print("error: the rees method needs a rees: monoid", file=sys.stderr)
        return 2
    table_budget = args.budget if args.budget else DEFAULT_TABLE_BUDGET
    match_budget = args.budget if args.budget else DEFAULT_MATCH_BUDGET
    results = {}
    if method in ("table", "both"):
        results["table"] = check_table(monoid, ident, table_budget)
    if method in ("rees", "both"):
        results["rees"] = check_rees(word_set, ident, match_budget)
    statuses = {out.status for out in results.values()}
    if args.json:
        payload = {name: _outcome_dict(out, monoid) for name, out in results.items()}
        payload["agree"] = len(statuses) == 1
        _print_json(payload)
    else:
        for name, out in results.items():
            line = f"{out.status}" if len(results) == 1 else f"{name}: {out.status}"
            if out.witness is not None:
                line += f"  witness {json.dumps(substitution_to_dict(out.witness, monoid))}"
            print(line)
        if len(statuses) > 1:
            print("warning: checkers disagree", file=sys.stderr)
    return 0 if statuses == {HOLDS} else 1


def _cmd_match(args) -> int:
    pattern = parse_word(args.pattern)
    target = parse_word(args.target)
    subs = match_pattern(pattern, target, erasing=not args.no_erasing, budget=args.budget)
    if args.json:
        _print_json([substitution_to_dict(s) for s in subs])
        return 0
    print(f"{len(subs)} substitutions")
    for s in subs:
        print("  " + ", ".join(f"{l} -> {v}" for l, v in s.assignment))
    return 0


def _cmd_enumerate(args) -> int:
    found = enumerate_small_rees(args.max_len, args.max_order)
    if args.json:
        _print_json([{"word": str(w), "order": o} for w, o in found])
        return 0
    for w, o in found:
        print(f"{w}\t{o}")
    return 0


def _cmd_verify(args) -> int:
    cfg = VerifyConfig(
        max_n=args.max_n,
        seed=args.seed,
        table_budget=args.table_budget or DEFAULT_TABLE_BUDGET,
        match_budget=args.match_budget or DEFAULT_MATCH_BUDGET,
    )
    report = run_claims(cfg)
    print(report.to_text())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
            fh.write("\n")
        print(f"report written to {args.out}")
    statuses = {c.status for c in report.claims}
    if "FAIL" in statuses:
        return 1
    if "BUDGET" in statuses:
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoidlab",
        description="Finite monoids from word factors: construction, identity checking, and the built-in claim suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rees", help="build the quotient of a word set and print its table")
    p.add_argument("wordset", help="comma-separated words, wn:N1,N2,..., or '' for the empty set")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_rees)

    p = sub.add_parser("depth", help="print the depth of every letter of a word")
    p.add_argument("word")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_depth)

    p = sub.add_parser("wn", help="print the n-th separating word in dotted form")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_wn)

    p = sub.add_parser("check", help="decide whether an identity holds in a monoid")
    p.add_argument("--monoid", required=True, help="rees:<wordset> or preset:<name>")
    p.add_argument("--identity", required=True, help='identity text, e.g. "x^3=x^4"')
    p.add_argument("--method", choices=("table", "rees", "both"), default="table")
    p.add_argument("--budget", type=int, default=0, help="override the default budget")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("match", help="enumerate substitutions matching a pattern into a word")
    p.add_argument("pattern")
    p.add_argument("target")
    p.add_argument("--no-erasing", action="store_true", help="forbid empty images")
    p.add_argument("--budget", type=int, default=DEFAULT_MATCH_BUDGET)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_match)

    p = sub.add_parser("enumerate", help="search small canonical words by quotient order")
    p.add_argument("--max-len", type=int, default=8)
    p.add_argument("--max-order", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify-paper", help="run the full claim suite and report")
    p.add_argument("--max-n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the JSON report to this file")
    p.add_argument("--match-budget", type=int, default=0,
                   help="raise the matcher budget (needed for --max-n 3)")
    p.add_argument("--table-budget", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except WorkbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
