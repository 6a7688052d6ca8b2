"""Command-line interface: gamma, construct, verify, sweep, enum-seq, export.

Exit codes: 0 on success or agreement, 1 on a mathematical disagreement or a
failed verification, 2 on usage or IO errors.  Dominating sets travel as
JSON documents {"n": ..., "delta": ..., "u": [...], "v": [...]} with sorted,
deduplicated 1-based index arrays.  KNODEL_THREADS sets the solver worker
count for the gamma and sweep commands (default 1).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .domination import VertexSet, undominated
from .gamma4 import ConstructionError, construct_dominating_set, gamma_formula
from .graphs import KnodelGraph, Side, build_graph, neighbors
from .sequences import enumerate_sequences
from .solver import canonical_certificate, solve_exact

__all__ = ["main", "load_adjacency_document"]


class _UsageError(Exception):
    pass


def _workers_from_env() -> int:
    raw = os.environ.get("KNODEL_THREADS")
    if raw is None:
        return 1
    try:
        workers = int(raw)
    except ValueError:
        workers = 0
    if workers < 1:
        raise _UsageError(f"KNODEL_THREADS must be a positive integer, got {raw!r}")
    return workers


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        print(text)
    else:
        Path(out).write_text(text + "\n")


def _set_document(ds: VertexSet) -> str:
    g = ds.graph
    doc = {
        "n": g.n,
        "delta": g.delta,
        "u": list(ds.u_indices),
        "v": list(ds.v_indices),
    }
    return json.dumps(doc)


def _strictly_increasing_ints(value: object, key: str) -> list[int]:
    if not isinstance(value, list) or any(
        not isinstance(q, int) or isinstance(q, bool) for q in value
    ):
        raise _UsageError(f'"{key}" must be an array of integers')
    if any(b <= a for a, b in zip(value, value[1:])):
        raise _UsageError(f'"{key}" must be sorted and deduplicated')
    return value


def _load_set_document(path: str) -> tuple[KnodelGraph, VertexSet]:
    try:
        raw = Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"invalid JSON in {path}: {exc}")
    if not isinstance(doc, dict):
        raise _UsageError(f"{path} must contain a JSON object")
    for key in ("n", "delta", "u", "v"):
        if key not in doc:
            raise _UsageError(f'{path} is missing the "{key}" key')
    n, delta = doc["n"], doc["delta"]
    if not isinstance(n, int) or not isinstance(delta, int):
        raise _UsageError('"n" and "delta" must be integers')
    u_indices = _strictly_increasing_ints(doc["u"], "u")
    v_indices = _strictly_increasing_ints(doc["v"], "v")
    try:
        g = build_graph(delta, n)
        ds = VertexSet.from_indices(g, u_indices, v_indices)
    except ValueError as exc:
        raise _UsageError(str(exc))
    return g, ds


def _cmd_gamma(args: argparse.Namespace) -> int:
    workers = _workers_from_env()
    doc: dict[str, object] = {"n": args.n, "delta": 4}
    if args.method in ("formula", "both"):
        doc["formula"] = gamma_formula(args.n).value
    if args.method in ("exact", "both"):
        g = build_graph(4, args.n)
        result = solve_exact(g, workers=workers)
        certificate = result.certificate
        if args.canonical:
            certificate = canonical_certificate(g, result.value)
        doc["exact"] = result.value
        doc["nodes"] = result.nodes_explored
        doc["certificate"] = {
            "u": list(certificate.u_indices),
            "v": list(certificate.v_indices),
        }
    if args.method == "both":
        doc["agree"] = doc["formula"] == doc["exact"]
    print(json.dumps(doc))
    return 0 if doc.get("agree", True) else 1


def _cmd_construct(args: argparse.Namespace) -> int:
    ds = construct_dominating_set(args.n)
    _write_output(_set_document(ds), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g, ds = _load_set_document(args.set)
    if args.graph is not None:
        n, delta = args.graph
        if (n, delta) != (g.n, g.delta):
            raise _UsageError(
                f"--graph {n} {delta} does not match the document's W({g.delta}, {g.n})"
            )
    missed = undominated(g, ds)
    if len(missed) == 0:
        print("PASS")
        return 0
    print(f"FAIL undominated={len(missed)}")
    for x in missed:
        print(str(x))
    return 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.start % 2 or args.stop % 2:
        raise _UsageError("sweep bounds must be even")
    if args.start > args.stop:
        raise _UsageError(f"--from {args.start} exceeds --to {args.stop}")
    if args.budget is not None and args.budget < 0:
        raise _UsageError(f"--budget must be non-negative, got {args.budget}")
    workers = _workers_from_env()
    rows = ["n,formula,exact,agree,construct_ok,elapsed_ms"]
    any_failure = False
    for n in range(args.start, args.stop + 2, 2):
        started = time.perf_counter()
        formula = gamma_formula(n).value
        exact = "unknown"
        agree = ""
        if args.budget != 0:
            result = solve_exact(build_graph(4, n), time_budget=args.budget, workers=workers)
            if result.is_exact:
                exact = str(result.value)
                agree = "true" if result.value == formula else "false"
        try:
            construct_dominating_set(n)
            construct_ok = "true"
        except ConstructionError:
            construct_ok = "false"
        if agree == "false" or construct_ok == "false":
            any_failure = True
        elapsed_ms = round((time.perf_counter() - started) * 1000)
        rows.append(f"{n},{formula},{exact},{agree},{construct_ok},{elapsed_ms}")
    _write_output("\n".join(rows), args.out)
    return 1 if any_failure else 0


def _cmd_enum_seq(args: argparse.Namespace) -> int:
    classes = enumerate_sequences(
        args.k, args.total, args.exact_in_m, args.adj_max, delta=args.delta
    )
    for cls in classes:
        print(",".join(str(gap) for gap in cls.canonical.gaps))
    print(f"count {len(classes)}")
    if args.expect is not None and args.expect != len(classes):
        return 1
    return 0


def _edgelist_text(g: KnodelGraph) -> str:
    lines = []
    for i in range(1, g.half + 1):
        for off in g.offsets:
            lines.append(f"u{i} v{(i - 1 + off) % g.half + 1}")
    return "\n".join(lines)


def _dot_text(g: KnodelGraph) -> str:
    lines = [f"graph knodel_{g.delta}_{g.n} {{"]
    for side in (Side.U, Side.V):
        lines.append(f"  subgraph cluster_{side.value} {{")
        lines.append(f'    label="{side.value.upper()}";')
        lines.append("    rank=same;")
        for i in range(1, g.half + 1):
            lines.append(f"    {side.value}{i};")
        lines.append("  }")
    for i in range(1, g.half + 1):
        for off in g.offsets:
            lines.append(f"  u{i} -- v{(i - 1 + off) % g.half + 1};")
    lines.append("}")
    return "\n".join(lines)


def _adjacency_text(g: KnodelGraph) -> str:
    adjacency: dict[str, list[str]] = {}
    for x in g.vertices():
        adjacency[str(x)] = [str(y) for y in sorted(neighbors(g, x))]
    return json.dumps({"n": g.n, "delta": g.delta, "adjacency": adjacency}, indent=2)


def load_adjacency_document(text: str) -> KnodelGraph:
    """Parse an exported adjacency document, revalidating every edge."""
    doc = json.loads(text)
    g = build_graph(doc["delta"], doc["n"])
    adjacency = doc["adjacency"]
    if len(adjacency) != g.n:
        raise ValueError(f"expected {g.n} adjacency entries, got {len(adjacency)}")
    for x in g.vertices():
        expected = [str(y) for y in sorted(neighbors(g, x))]
        if adjacency.get(str(x)) != expected:
            raise ValueError(f"adjacency of {x} does not match W({g.delta}, {g.n})")
    return g


def _cmd_export(args: argparse.Namespace) -> int:
    g = build_graph(args.delta, args.n)
    if args.format == "edgelist":
        text = _edgelist_text(g)
    elif args.format == "dot":
        text = _dot_text(g)
    else:
        text = _adjacency_text(g)
    _write_output(text, args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knodel",
        description="Domination numbers, certificates and exports for Knödel graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="domination number of W(4, n)")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("formula", "exact", "both"), default="both")
    p.add_argument(
        "--canonical",
        action="store_true",
        help="report the lexicographically smallest optimal certificate",
    )
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("construct", help="write an optimal dominating set of W(4, n)")
    p.add_argument("n", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check a dominating-set document")
    p.add_argument("--set", required=True, help="path of the JSON set document")
    p.add_argument(
        "--graph",
        nargs=2,
        type=int,
        metavar=("N", "DELTA"),
        help="require the document to describe W(DELTA, N)",
    )
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="compare formula, solver and construction over a range")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--budget", type=float, help="solver seconds per order; 0 skips the solver")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("enum-seq", help="enumerate gap-sequence classes up to rotation")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--total", type=int, required=True)
    p.add_argument("--exact-in-m", dest="exact_in_m", type=int, required=True)
    p.add_argument("--adj-max", dest="adj_max", type=int, required=True)
    p.add_argument("--delta", type=int, default=4)
    p.add_argument("--expect", type=int, help="exit 1 unless exactly this many classes")
    p.set_defaults(func=_cmd_enum_seq)

    p = sub.add_parser("export", help="serialise W(delta, n)")
    p.add_argument("n", type=int)
    p.add_argument("--delta", type=int, default=4)
    p.add_argument("--format", choices=("dot", "edgelist", "json"), required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
