"""Command-line surface: generate / construct / verify / route / stats.

Exit codes follow the verification contract: 0 = pass, 1 = a check failed,
2 = the input could not be used at all (parse error, bad arguments).
Output is deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from . import routing, serialize, topology
from .errors import AqcistError, MalformedFamilyError
from .families import CistFamily
from .lifting import DEFAULT_MAX_N, construct_cists
from .verification import DEFAULT_BRUTEFORCE_MAX_N, verify_family

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


@contextmanager
def _open_output(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _format_vertex(n: int, u: int, labels: str) -> str:
    if labels == "paper":
        return str(topology.paper_label(u))
    return topology.format_vertex(n, u)


def _parse_vertex_arg(n: int, text: str, labels: str) -> int:
    if labels == "paper":
        try:
            value = topology.from_paper_label(int(text))
        except ValueError as exc:
            raise MalformedFamilyError(f"bad 1-based label {text!r}") from exc
    else:
        value = topology.parse_vertex(text, n)
    topology.check_vertex(n, value)
    return value


def cmd_generate(args) -> int:
    max_dim = args.max_n_override or topology.MAX_BUILD_DIM
    with _open_output(args.output) as out:
        serialize.write_graph(args.n, args.format, out, max_dim=max_dim)
    return EXIT_PASS


def cmd_construct(args) -> int:
    family = construct_cists(args.n, max_n=args.max_n_override or DEFAULT_MAX_N)
    text = serialize.family_to_json(family)
    with _open_output(args.output) as out:
        out.write(text)
    diameters = " ".join(str(d) for d in family.diameters())
    status = sys.stderr if args.output == "-" else sys.stdout
    print(f"n={family.n} k={family.k} diameters: {diameters}", file=status)
    return EXIT_PASS


def cmd_verify(args) -> int:
    family = serialize.load_family(args.family)
    report = verify_family(family, args.mode,
                           max_bruteforce_n=args.max_n_override or DEFAULT_BRUTEFORCE_MAX_N)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.to_text())
    return EXIT_PASS if report.ok else EXIT_FAIL


def cmd_route(args) -> int:
    family = serialize.load_family(args.family)
    n = family.n
    src = _parse_vertex_arg(n, args.src, args.labels)
    dst = _parse_vertex_arg(n, args.dst, args.labels)
    paths = routing.disjoint_routes(family, src, dst)
    adjacent = topology.are_adjacent(n, src, dst)
    print(f"{family.k} disjoint routes {_format_vertex(n, src, args.labels)} -> "
          f"{_format_vertex(n, dst, args.labels)} in AQ_{n} "
          f"(endpoints adjacent: {'yes, graph distance 1' if adjacent else 'no'})")
    for i, path in enumerate(paths):
        rendered = " ".join(_format_vertex(n, u, args.labels) for u in path)
        print(f"T{i + 1} (length {len(path) - 1}): {rendered}")
    return EXIT_PASS


def _tree_rows(family: CistFamily, labels: str) -> list[tuple[str, ...]]:
    rows = []
    for i, t in enumerate(family.trees):
        center = _format_vertex(family.n, t.center(), labels) if t.vertex_count >= 3 else "-"
        rows.append((f"T{i + 1}", str(len(t.edges)), str(t.diameter()),
                     str(t.radius()), center, str(len(t.internal_vertices()))))
    return rows


def cmd_stats(args) -> int:
    family = serialize.load_family(args.family)
    print(f"family: n={family.n} k={family.k} provenance={family.provenance}")
    header = ("tree", "edges", "diameter", "radius", "center", "internal")
    rows = [header] + _tree_rows(family, args.labels)
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    all_edges = [e for edges in family.edge_lists for e in edges]
    edge_disjoint = len(all_edges) == len(set(all_edges))
    internal_sets = family.internal_vertex_sets()
    internal_total = sum(len(s) for s in internal_sets)
    internal_disjoint = len(frozenset().union(*internal_sets)) == internal_total
    print(f"edge-disjoint: {'yes' if edge_disjoint else 'no'}")
    print(f"internal-disjoint: {'yes' if internal_disjoint else 'no'}")
    if args.samples is not None:
        if args.samples <= 0:
            raise MalformedFamilyError("--samples must be positive")
        summary = routing.route_stats(family, samples=args.samples, seed=args.seed)
        print(f"route lengths over {summary['pair_count']} pairs "
              f"(seed {summary['seed']}, adjacent pairs {summary['adjacent_pair_count']}):")
        for entry in summary["per_tree"]:
            print(f"T{entry['tree']}: max {entry['max_length']} "
                  f"mean {entry['mean_length']:.3f}")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aqcist",
        description="Augmented-cube CIST construction, verification and routing")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="export the full AQ_n edge set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=serialize.GRAPH_FORMATS, default="edgelist")
    p.add_argument("--output", default="-")
    p.add_argument("--max-n-override", type=int, default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("construct", help="build the CIST family on AQ_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--output", default="-")
    p.add_argument("--max-n-override", type=int, default=None)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a family file for the CIST property")
    p.add_argument("family")
    p.add_argument("--mode", choices=("characterization", "bruteforce", "both", "auto"),
                   default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-n-override", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("route", help="print the k disjoint tree paths between two vertices")
    p.add_argument("family")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--labels", choices=("binary", "paper"), default="binary")
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("stats", help="per-tree and family-level statistics")
    p.add_argument("family")
    p.add_argument("--labels", choices=("binary", "paper"), default="binary")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AqcistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BrokenPipeError:
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
