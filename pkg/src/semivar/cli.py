"""Command-line interface: ``python -m semivar <command> ...``.

Exit codes: 0 pass or Holds, 1 Fails, 2 Unknown, 64 parse error,
65 precondition error, 66 missing input file, 69 resource limit.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .engine import Budget, Fails, Holds, ResourceError, decide, find_deduction, theory_summary
from .engine.deduction import DEFAULT_MAX_STEPS
from .engine.models import DEFAULT_MAX_ORDER
from .engine.summary import DEFAULT_CEILING
from .identities import IdentitySystem, IdsSyntaxError, parse_identity, parse_system
from .permgroups import Permutation, all_subgroups, perm_n
from .varlattice import (
    FlatNil, PreconditionError, SLJoin, TotalityError, admissible_triples, classify_word,
    verify_prop2, verify_theorem1,
)
from .words import Word

EXIT_OK, EXIT_FAILS, EXIT_UNKNOWN = 0, 1, 2
EXIT_PARSE, EXIT_PRECONDITION, EXIT_NOINPUT, EXIT_RESOURCE = 64, 65, 66, 69


class ParseError(ValueError):
    pass


def _read_system(path: str) -> IdentitySystem:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_system(text)


def _word(text: str) -> Word:
    try:
        return Word.parse(text)
    except ValueError as e:
        raise ParseError(str(e)) from e


def _perm(text: str) -> Permutation:
    try:
        return Permutation.parse(text, 3)
    except ValueError as e:
        raise ParseError(str(e)) from e


def _budget(args) -> Budget:
    return Budget(max_order=args.max_order, ceiling=args.bound)


def _budget_line(args) -> str:
    return f"budget: bound={args.bound} max-order={args.max_order} max-steps={args.max_steps}"


def _budget_dict(args) -> dict:
    return {"bound": args.bound, "max_order": args.max_order, "max_steps": args.max_steps}


def _emit(args, payload: dict, text: str):
    if args.json:
        payload = {**payload, "budget": _budget_dict(args)}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)
        print(_budget_line(args))


# --- commands ---------------------------------------------------------------

def cmd_check(args) -> int:
    sigma = _read_system(args.system)
    ident = parse_identity(args.identity)
    out = decide(sigma, ident, _budget(args))
    payload = {"command": "check", "identity": str(ident), "status": out.status}
    if isinstance(out, Fails):
        payload["model_order"] = out.model.order
        payload["model"] = out.model.rows()
        text = f"Fails (order-{out.model.order} model)"
        if args.show_model:
            text += "\n" + str(out.model)
    elif isinstance(out, Holds):
        text = "Holds"
    else:
        payload["reason"] = out.reason
        text = f"Unknown: {out.reason}"
    _emit(args, payload, text)
    return {"Holds": EXIT_OK, "Fails": EXIT_FAILS}.get(out.status, EXIT_UNKNOWN)


def cmd_summary(args) -> int:
    sigma = _read_system(args.system)
    s = theory_summary(sigma, ceiling=args.bound)
    _emit(args, {"command": "summary", **s.to_dict()}, s.report().rstrip("\n"))
    return EXIT_OK if s.total else EXIT_UNKNOWN


def cmd_classify(args) -> int:
    N = FlatNil.of(_read_system(args.system), budget=_budget(args))
    w = _word(args.word)
    c = classify_word(N, w)
    _emit(args, {"command": "classify", "word": str(w), "class": c.tag}, c.tag)
    return EXIT_OK


def cmd_perms(args) -> int:
    sigma = _read_system(args.system)
    if args.n < 2:
        raise PreconditionError("n must be at least 2")
    r = perm_n(sigma, args.n, _budget(args))
    payload = {
        "command": "perms", "n": args.n, "exact": r.exact,
        "lower": r.lower.name(), "upper": r.upper.name(),
        "lower_elements": [str(p) for p in r.lower.sorted_elements()],
        "upper_elements": [str(p) for p in r.upper.sorted_elements()],
    }
    _emit(args, payload, str(r))
    return EXIT_OK if r.exact else EXIT_UNKNOWN


def cmd_subgroups(args) -> int:
    L = all_subgroups(args.n)
    if args.dot and not args.json:
        print(L.to_dot())
        return EXIT_OK
    lines = [f"{len(L.subgroups)} subgroups of S_{args.n}"]
    for G in L.subgroups:
        lines.append(f"  {G.name()} (order {G.order})")
    lines.append("Hasse edges:")
    lines += [f"  {a} -> {b}" for a, b in L.edge_list()]
    payload = {
        "command": "subgroups", "n": args.n,
        "subgroups": [{"name": G.name(), "order": G.order,
                       "elements": [str(p) for p in G.sorted_elements()]} for G in L.subgroups],
        "edges": [list(e) for e in L.edge_list()],
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _side(path: str, with_sl: bool, budget: Budget):
    sigma = _read_system(path)
    if not with_sl:
        return sigma
    return SLJoin(FlatNil.of(sigma, path, budget))


def cmd_deduce(args) -> int:
    budget = _budget(args)
    A = _side(args.system_a, args.with_sl, budget)
    B = _side(args.system_b, args.with_sl, budget)
    u, v = _word(args.u), _word(args.v)
    d = find_deduction(A, B, u, v, max_len=args.max_len, max_steps=args.max_steps)
    if d is None:
        _emit(args, {"command": "deduce", "found": False},
              f"no deduction of {u} = {v} within {args.max_steps} steps")
        return EXIT_UNKNOWN
    payload = {"command": "deduce", "found": True, "words": [str(w) for w in d.words], "tags": list(d.tags)}
    _emit(args, payload, str(d))
    return EXIT_OK


def cmd_verify_prop2(args) -> int:
    budget = _budget(args)
    if args.all:
        triples = admissible_triples()
    else:
        if not (args.rho and args.sigma and args.tau):
            raise PreconditionError("give --rho, --sigma and --tau, or --all")
        triples = [(_perm(args.rho), _perm(args.sigma), _perm(args.tau))]
    reports = [verify_prop2(*t, budget=budget) for t in triples]
    ok = all(r.overall for r in reports)
    payload = {"command": "verify-prop2", "reports": [r.to_dict() for r in reports],
               "count": len(reports), "overall": ok}
    text = "\n".join(str(r) for r in reports)
    text += f"\n{sum(r.overall for r in reports)}/{len(reports)} triples pass: {'PASS' if ok else 'FAIL'}"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAILS


def cmd_verify_theorem1(args) -> int:
    rep = verify_theorem1(_budget(args))
    _emit(args, {"command": "verify-theorem1", **rep.to_dict()}, str(rep))
    return EXIT_OK if rep.overall else EXIT_FAILS


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=int, default=DEFAULT_CEILING,
                        help=f"ceiling of the saturation bound schedule (default {DEFAULT_CEILING})")
    common.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                        help=f"largest countermodel order searched (default {DEFAULT_MAX_ORDER})")
    common.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS,
                        help=f"longest deduction searched (default {DEFAULT_MAX_STEPS})")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="semivar", description="Semigroup identities and variety lattices.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="decide an identity in var(system)")
    c.add_argument("system", help=".ids file, or - for stdin")
    c.add_argument("identity")
    c.add_argument("--show-model", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("summary", parents=[common], help="theory summary of a system")
    c.add_argument("system")
    c.set_defaults(func=cmd_summary)

    c = sub.add_parser("classify", parents=[common], help="Z/L/S class of a word")
    c.add_argument("system")
    c.add_argument("word")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("perms", parents=[common], help="Perm_n of var(system)")
    c.add_argument("system")
    c.add_argument("n", type=int)
    c.set_defaults(func=cmd_perms)

    c = sub.add_parser("subgroups", parents=[common], help="subgroup lattice of S_n (n <= 4)")
    c.add_argument("n", type=int)
    c.add_argument("--dot", action="store_true", help="print the Hasse diagram as DOT")
    c.set_defaults(func=cmd_subgroups)

    c = sub.add_parser("deduce", parents=[common], help="deduction of u = v from two systems")
    c.add_argument("system_a")
    c.add_argument("system_b")
    c.add_argument("u")
    c.add_argument("v")
    c.add_argument("--max-len", type=int, default=None)
    c.add_argument("--with-sl", action="store_true", help="join both varieties with SL")
    c.set_defaults(func=cmd_deduce)

    c = sub.add_parser("verify-prop2", parents=[common], help="check a modular, non-cancellable triple")
    c.add_argument("--rho")
    c.add_argument("--sigma")
    c.add_argument("--tau")
    c.add_argument("--all", action="store_true", help="every admissible ordered triple")
    c.set_defaults(func=cmd_verify_prop2)

    c = sub.add_parser("verify-theorem1", parents=[common], help="check the four classification systems")
    c.set_defaults(func=cmd_verify_theorem1)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (IdsSyntaxError, ParseError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as e:
        print(f"no such file: {e.filename}", file=sys.stderr)
        return EXIT_NOINPUT
    except (PreconditionError, TotalityError) as e:
        print(f"precondition error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ResourceError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
