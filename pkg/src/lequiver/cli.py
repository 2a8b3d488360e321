"""Command-line front end.

Machine-readable output goes to stdout, diagnostics to stderr.  Exit codes:
0 success, 1 verification failed or nothing found, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .construct import grid_to_le_script, quiver_from_le, quiver_via_script
from .gseed import Mode, verify_sequence
from .le import LeError, enumerate_diagrams, parse_diagram
from .plabic import quiver_via_plabic
from .quiver import Quiver, QuiverError, grid_quiver, is_isomorphic
from .search import find_sequence

BUILDERS = {
    "construction": quiver_from_le,
    "plabic": quiver_via_plabic,
    "script": quiver_via_script,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_quiver(path: str) -> Quiver:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return Quiver.from_json(text)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"cannot read quiver from {path}: {exc}") from None


def parse_sequence(text: str, vertices) -> list[str]:
    """Split a vertex list.  Whitespace or ``;`` separate outright; with commas
    only, pieces are re-joined greedily so that names like ``v1,2`` survive."""
    if any(c.isspace() or c == ";" for c in text.strip()):
        return text.replace(";", " ").split()
    names = set(vertices)
    parts = [p for p in text.split(",") if p]
    out, i = [], 0
    while i < len(parts):
        for n in range(len(parts) - i, 0, -1):
            cand = ",".join(parts[i:i + n])
            if cand in names:
                break
        else:
            raise UsageError(f"unknown vertex at {parts[i]!r}")
        out.append(cand)
        i += n
    return out


def _emit_quiver(q: Quiver, fmt: str):
    print(q.to_dot() if fmt == "dot" else q.to_json(indent=2))


def cmd_validate(args) -> int:
    d = parse_diagram(args.diagram)
    print(json.dumps({"ok": True, "shape": list(d.shape.row_lengths),
                      "ones": len(d.ones()), "zeros": len(d.zeros())}))
    return 0


def cmd_build(args) -> int:
    q = BUILDERS[args.via](parse_diagram(args.diagram))
    _emit_quiver(q, args.format)
    return 0


def cmd_grid(args) -> int:
    if args.r < 1 or args.c < 1:
        raise UsageError("grid dimensions must be positive")
    _emit_quiver(grid_quiver(args.r, args.c), args.format)
    return 0


def cmd_mutate(args) -> int:
    q = _load_quiver(args.quiver)
    for v in parse_sequence(args.sequence, q.vertices):
        q = q.mutate(v)
    _emit_quiver(q, args.format)
    return 0


def cmd_check_seq(args) -> int:
    q = _load_quiver(args.quiver)
    mode = Mode.MAXIMAL_GREEN if args.maximal_green else Mode.GREEN_TO_RED
    verdict = verify_sequence(q, parse_sequence(args.seq, q.vertices), mode)
    print("accepted" if verdict.accepted else "rejected")
    if args.verbose:
        print(verdict.to_json(indent=2))
    if not verdict.accepted:
        print(verdict.reason, file=sys.stderr)
    return 0 if verdict.accepted else 1


def cmd_search_gtr(args) -> int:
    if args.max_depth < 0 or args.max_nodes < 1:
        raise UsageError("caps must be positive")
    q = _load_quiver(args.quiver)
    mode = Mode.MAXIMAL_GREEN if args.maximal_green else Mode.GREEN_TO_RED
    res = find_sequence(q, mode, args.max_depth, args.max_nodes)
    print(res.to_json())
    return 0 if res.found else 1


def cmd_script(args) -> int:
    s = grid_to_le_script(parse_diagram(args.diagram))
    print(s.to_json(with_trace=args.trace, indent=2))
    return 0


def cmd_enumerate(args) -> int:
    for d in enumerate_diagrams(args.r, args.c, limit=args.limit):
        print(d)
    return 0


def crosscheck(diagrams) -> tuple[int, list[str]]:
    """Run all three pipelines on each diagram; return the count and the
    diagrams on which they disagree."""
    n, bad = 0, []
    for d in diagrams:
        n += 1
        a = quiver_from_le(d)
        b = quiver_via_plabic(d)
        c = quiver_via_script(d)
        if not (is_isomorphic(a, b) and is_isomorphic(a.mutable_part(), c.mutable_part())):
            bad.append(str(d))
    return n, bad


def cmd_crosscheck(args) -> int:
    diagrams = list(enumerate_diagrams(args.r, args.c))
    if args.samples is not None:
        rng = random.Random(args.seed)
        diagrams = rng.sample(diagrams, min(args.samples, len(diagrams)))
    n, bad = crosscheck(diagrams)
    for d in bad:
        print(f"mismatch: {d}", file=sys.stderr)
    print(f"{n} diagrams, {len(bad)} mismatches")
    return 0 if not bad else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lequiver", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check a Le-diagram such as 01010/1101/00/01")
    s.add_argument("diagram")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("build", help="quiver of a Le-diagram")
    s.add_argument("diagram")
    s.add_argument("--via", choices=sorted(BUILDERS), default="construction")
    s.add_argument("--format", choices=["json", "dot"], default="json")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("grid", help="grid quiver of an r x c rectangle")
    s.add_argument("r", type=int)
    s.add_argument("c", type=int)
    s.add_argument("--format", choices=["json", "dot"], default="json")
    s.set_defaults(func=cmd_grid)

    s = sub.add_parser("mutate", help="mutate a quiver JSON file along a sequence")
    s.add_argument("quiver")
    s.add_argument("sequence")
    s.add_argument("--format", choices=["json", "dot"], default="json")
    s.set_defaults(func=cmd_mutate)

    s = sub.add_parser("check-seq", help="verify a green-to-red or maximal green sequence")
    s.add_argument("quiver")
    s.add_argument("--seq", required=True)
    s.add_argument("--maximal-green", action="store_true")
    s.add_argument("-v", "--verbose", action="store_true")
    s.set_defaults(func=cmd_check_seq)

    s = sub.add_parser("search-gtr", help="search for a green-to-red sequence")
    s.add_argument("quiver")
    s.add_argument("--max-depth", type=int, default=12)
    s.add_argument("--max-nodes", type=int, default=10**6)
    s.add_argument("--maximal-green", action="store_true")
    s.set_defaults(func=cmd_search_gtr)

    s = sub.add_parser("script", help="grid-to-Le mutation script")
    s.add_argument("diagram")
    s.add_argument("--trace", action="store_true")
    s.set_defaults(func=cmd_script)

    s = sub.add_parser("enumerate", help="list Le-diagrams fitting in r x c")
    s.add_argument("r", type=int)
    s.add_argument("c", type=int)
    s.add_argument("--limit", type=int)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("crosscheck", help="compare the three pipelines")
    s.add_argument("r", type=int)
    s.add_argument("c", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_crosscheck)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, LeError, QuiverError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
