"""Command-line front end.

Verbs: ``ec``, ``gamma``, ``verify``, ``ecg``, ``bounds``, ``generate``,
``corpus``, ``theorems``.  Graphs come either from a family spec string
(``--family path:6``) or an edge-list file (``--graph g.el``).  Exit codes:
0 success, 1 negative verification (or failed theorem checks), 2 usage
error, 3 budget exceeded.  The environment variable ``ECLAB_MAX_EDGES``
overrides the exact-mode edge cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import theorems
from .coalition import (
    DEFAULT_EXACT_EDGE_CAP,
    certificate_json,
    coalition_graph,
    ec_bounds,
    edge_coalition_lower_bound,
    edge_coalition_number,
    is_ec_partition,
    validate_partition,
)
from .domination import edge_domination_number
from .errors import (
    BudgetExceeded,
    EclabError,
    InvalidPartition,
    InvalidSpec,
    NotAnEcPartition,
)
from .families import K24_PARTITION_PRESETS, FamilySpec, generate
from .graphs import Graph, format_edge_list, parse_edge_list
from .oracle import CorpusSpec, export_corpus

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _UsageError(Exception):
    pass


def _load_graph(args: argparse.Namespace) -> Graph:
    if getattr(args, "family", None):
        return generate(FamilySpec.parse(args.family))
    path = Path(args.graph)
    try:
        return parse_edge_list(path.read_text())
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc
    except ValueError as exc:
        raise _UsageError(f"cannot parse {path}: {exc}") from exc


def _add_input_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help="family spec, e.g. path:6, cycle:7, dstar:3,2, kbip:2,4")
    group.add_argument("--graph", help="edge-list file ('n m' header, then 'u v' lines)")


def _add_format_arg(parser: argparse.ArgumentParser, default: str = "text") -> None:
    parser.add_argument(
        "--format", choices=("json", "dot", "text"), default=default, help="output format"
    )


def _edge_cap(args: argparse.Namespace) -> int:
    if args.max_edges is not None:
        return args.max_edges
    env = os.environ.get("ECLAB_MAX_EDGES")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise _UsageError(f"ECLAB_MAX_EDGES must be an integer, got {env!r}") from exc
    return DEFAULT_EXACT_EDGE_CAP


def _parse_partition_arg(args: argparse.Namespace, g: Graph) -> tuple[frozenset[int], ...]:
    if getattr(args, "partition_id", None):
        preset = K24_PARTITION_PRESETS.get(args.partition_id)
        if preset is None:
            raise _UsageError(
                f"unknown partition id {args.partition_id!r}; "
                f"known: {', '.join(sorted(K24_PARTITION_PRESETS))}"
            )
        if (g.n, g.m) != (6, 8):
            raise _UsageError("--partition-id presets apply to the graph kbip:2,4 only")
        return preset
    raw = getattr(args, "partition", None)
    if raw is None:
        raise _UsageError("a partition is required (--partition or --partition-id)")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"--partition is not valid JSON: {exc}") from exc
    if not isinstance(data, list) or not all(isinstance(b, list) for b in data):
        raise _UsageError("--partition must be a JSON array of arrays of edge indices")
    return validate_partition(g, [frozenset(b) for b in data])


def _graph_as_dot(g: Graph, labels: list[str] | None = None) -> str:
    names = labels if labels is not None else [str(v) for v in range(g.n)]
    lines = ["graph {"]
    mentioned = set()
    for u, v in g.edges:
        lines.append(f"  {names[u]} -- {names[v]};")
        mentioned.update((u, v))
    for v in range(g.n):
        if v not in mentioned:
            lines.append(f"  {names[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_ec(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    cap = _edge_cap(args)
    if args.lower_bound or g.m > cap:
        if not args.lower_bound:
            raise BudgetExceeded(
                f"graph has m={g.m} edges, above the exact-mode cap {cap}; "
                "rerun with --lower-bound or raise ECLAB_MAX_EDGES"
            )
        result = edge_coalition_lower_bound(g, time_budget=args.time_budget, jobs=args.jobs)
    else:
        result = edge_coalition_number(g, max_edges=cap, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps(certificate_json(result)))
    else:
        label = "EC" if result.mode == "exact" else "EC >="
        print(f"{label} {result.ec}")
        for i, block in enumerate(result.certificate.blocks):
            just = result.certificate.justifications[i]
            note = (
                "full edge"
                if type(just).__name__ == "FullEdgeSingleton"
                else f"partner {just.with_block}"
            )
            print(f"  block {i}: {sorted(block)}  ({note})")
    return EXIT_OK


def _cmd_gamma(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    result = edge_domination_number(g)
    if args.format == "json":
        print(json.dumps({"gamma_prime": result.gamma_prime, "witness": sorted(result.witness)}))
    else:
        print(f"gamma' {result.gamma_prime}")
        print(f"witness {sorted(result.witness)}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    blocks = _parse_partition_arg(args, g)
    outcome = is_ec_partition(g, blocks)
    if outcome:
        if args.format == "json":
            payload = {
                "valid": True,
                "order": outcome.order,
                "blocks": [sorted(b) for b in outcome.blocks],
            }
            print(json.dumps(payload))
        else:
            print(f"valid ec-partition of order {outcome.order}")
        return EXIT_OK
    if args.format == "json":
        print(json.dumps({"valid": False, "block": outcome.block, "reason": outcome.reason}))
    else:
        print(outcome.message())
    return EXIT_NEGATIVE


def _cmd_ecg(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    blocks = _parse_partition_arg(args, g)
    ecg = coalition_graph(g, blocks)
    if args.format == "dot":
        sys.stdout.write(_graph_as_dot(ecg, [f"B{i}" for i in range(ecg.n)]))
    elif args.format == "json":
        print(json.dumps({"n": ecg.n, "edges": [list(e) for e in ecg.edges]}))
    else:
        sys.stdout.write(format_edge_list(ecg))
    return EXIT_OK


def _cmd_bounds(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    report = ec_bounds(g)
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "source": e.source,
                        "kind": e.kind,
                        "value": e.value,
                        "applicable": e.applicable,
                        "reason": e.reason,
                    }
                    for e in report.entries
                ]
            )
        )
    else:
        print(f"{'source':30s} {'kind':6s} {'value':>5s}  applicable  reason")
        for e in report.entries:
            flag = "yes" if e.applicable else "no"
            print(f"{e.source:30s} {e.kind:6s} {e.value:5d}  {flag:10s}  {e.reason}")
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace) -> int:
    g = generate(FamilySpec.parse(args.family))
    text = format_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_corpus(args: argparse.Namespace) -> int:
    classes = tuple(args.classes.split(","))
    spec = CorpusSpec(args.max_vertices, classes)
    written = export_corpus(spec, args.out_dir)
    print(f"wrote {len(written)} graphs to {args.out_dir}")
    return EXIT_OK


def _cmd_theorems(args: argparse.Namespace) -> int:
    tags = tuple(args.only.split(",")) if args.only else None
    if tags is not None:
        known = {tag for tag, _ in theorems.CHECKS}
        unknown = [t for t in tags if t not in known]
        if unknown:
            raise _UsageError(f"unknown check tags: {', '.join(unknown)}")
    results = theorems.run_all(tags)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_NEGATIVE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eclab",
        description="Exact edge coalition computations on small graphs.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("ec", help="compute the edge coalition number with a certificate")
    _add_input_args(p)
    _add_format_arg(p)
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the search")
    p.add_argument("--max-edges", type=int, default=None, help="override the exact-mode cap")
    p.add_argument(
        "--lower-bound",
        action="store_true",
        help="report the best certificate found within --time-budget instead of the exact value",
    )
    p.add_argument("--time-budget", type=float, default=30.0, help="seconds for --lower-bound")
    p.set_defaults(func=_cmd_ec)

    p = sub.add_parser("gamma", help="compute the edge domination number")
    _add_input_args(p)
    _add_format_arg(p)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("verify", help="verify a partition (JSON array of edge-index arrays)")
    _add_input_args(p)
    _add_format_arg(p)
    p.add_argument("--partition", help='e.g. \'[[0,4],[1],[2],[3]]\'')
    p.add_argument("--partition-id", help="built-in partition of kbip:2,4 (pi1..pi6)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("ecg", help="build the coalition graph of an ec-partition")
    _add_input_args(p)
    _add_format_arg(p, default="dot")
    p.add_argument("--partition", help="JSON array of arrays of edge indices")
    p.add_argument("--partition-id", help="built-in partition of kbip:2,4 (pi1..pi6)")
    p.set_defaults(func=_cmd_ecg)

    p = sub.add_parser("bounds", help="report known bounds with applicability flags")
    _add_input_args(p)
    _add_format_arg(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("generate", help="write a family graph as an edge list")
    p.add_argument("--family", required=True)
    p.add_argument("--output", help="file path (default: stdout)")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("corpus", help="export exhaustive small-graph corpora")
    p.add_argument("--classes", default="connected", help="comma list: all,connected,trees,unicyclic")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=_cmd_corpus)

    p = sub.add_parser("theorems", help="run the reproduction suite")
    p.add_argument("--only", help="comma list of check tags to run")
    p.set_defaults(func=_cmd_theorems)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotAnEcPartition as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (_UsageError, InvalidSpec, InvalidPartition) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EclabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
