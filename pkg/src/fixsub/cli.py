"""fixsub command line: graphgen, report, verify.

Exit codes: 0 when every checked claim passes, 1 when any fails,
2 for usage errors, unreadable input, or infeasible ranges.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import fixing, graphs, petersen, verify

FAMILIES = {
    # name: (number of integer params, builder)
    "cycle": (1, lambda p: graphs.make_cycle(p[0])),
    "complete": (1, lambda p: graphs.make_complete(p[0])),
    "bipartite": (2, lambda p: graphs.make_complete_bipartite(p[0], p[1])),
    "circulant": (None, lambda p: graphs.make_circulant(p[0], p[1:])),
    "gp": (2, lambda p: graphs.make_generalized_petersen(p[0], p[1])),
    "lcf": (None, lambda p: graphs.make_lcf(p[0], list(p[1:]))),
    "heawood": (0, lambda p: graphs.heawood()),
    "cage8": (0, lambda p: graphs.tutte_8cage()),
    "line-k33": (0, lambda p: graphs.line_graph(graphs.make_complete_bipartite(3, 3))),
}


class UsageError(Exception):
    pass


def build_family(name: str, params: list[str]) -> graphs.Graph:
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    arity, build = FAMILIES[name]
    try:
        ints = [int(x) for x in params]
    except ValueError:
        raise UsageError(f"parameters for {name} must be integers, got {params}") from None
    if arity is not None and len(ints) != arity:
        raise UsageError(f"{name} takes {arity} parameter(s), got {len(ints)}")
    if arity is None and len(ints) < 2:
        raise UsageError(f"{name} needs n followed by at least one residue")
    try:
        return build(ints)
    except graphs.GraphError as exc:
        raise UsageError(str(exc)) from None


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(":")
        return int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like a:b, got {text!r}") from None


def cmd_graphgen(args) -> int:
    G = build_family(args.family, args.params)
    if args.format == "edgelist":
        sys.stdout.write(graphs.encode_edgelist(G))
    else:
        print(graphs.encode_graph6(G))
    return 0


def _load_input(tokens: list[str]) -> tuple[graphs.Graph, tuple[int, int] | None]:
    if tokens and tokens[0] in FAMILIES:
        G = build_family(tokens[0], tokens[1:])
        nk = (int(tokens[1]), int(tokens[2])) if tokens[0] == "gp" else None
        return G, nk
    if len(tokens) != 1:
        raise UsageError("report takes a family spec, a file path, or '-' for stdin")
    try:
        text = sys.stdin.read() if tokens[0] == "-" else open(tokens[0]).read()
        return graphs.read_graph(text), None
    except OSError as exc:
        raise UsageError(f"cannot read {tokens[0]}: {exc}") from None
    except graphs.GraphError as exc:
        raise UsageError(f"cannot parse graph: {exc}") from None


def cmd_report(args) -> int:
    G, nk = _load_input(args.graph)
    rep = fixing.ham_orbit_report(G)
    sig = None
    if nk is not None:
        sig = lambda o: petersen.orbit_signature_text(o, *nk)  # noqa: E731
    out = {"graph": graphs.encode_graph6(G), **rep.to_json(sig)}
    print(json.dumps(out, sort_keys=True))
    return 0


def cmd_verify(args) -> int:
    cfg = verify.VerifyConfig(
        suite=args.suite, k=args.k, range=args.range, slow=args.slow,
        jobs=args.jobs, seed=args.seed, samples=args.samples,
    )
    try:
        rows = verify.run(cfg)
    except verify.Infeasible as exc:
        print(f"fixsub verify: refused: {exc}", file=sys.stderr)
        return 2
    if args.format == "text":
        print(verify.format_text(rows))
    else:
        print(verify.dumps(rows, timing=not args.no_timing))
    return 1 if any(r.status == "fail" for r in rows) else 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fixsub", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("graphgen", help="emit a graph from a named family")
    g.add_argument("family")
    g.add_argument("params", nargs="*")
    g.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    g.set_defaults(func=cmd_graphgen)

    r = sub.add_parser("report", help="Hamiltonian-cycle orbit report as JSON")
    r.add_argument("graph", nargs="+", help="family spec (e.g. 'gp 10 2'), a file, or '-'")
    r.add_argument("--format", choices=("json",), default="json")
    r.set_defaults(func=cmd_report)

    v = sub.add_parser("verify", help="check claims and print one row per instance")
    v.add_argument("suite", choices=verify.SUITES + ("all",))
    v.add_argument("--k", type=int, choices=(1, 2))
    v.add_argument("--range", type=_parse_range)
    v.add_argument("--slow", action="store_true", help="allow the n = 7 exhaustive search")
    v.add_argument("--jobs", type=int, default=verify.default_jobs())
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=500)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--no-timing", action="store_true", help="omit runtime_ms for byte-stable output")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"fixsub {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
