"""Command-line entry point: ``prismdim <subcommand> ...``.

Every JSON document starts with a header binding it to its input
(tool version, graph hash, echoed configuration).  Thread count and timing
are left out of the echo so that outputs are byte-identical across them.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from prismdim import __version__
from prismdim.bounds import audit_bounds
from prismdim.claims import (
    format_report_text,
    format_summary_table,
    summary_table,
    verify_all_claims,
    verify_claims,
)
from prismdim.corpus import random_connected_graph
from prismdim.errors import BudgetExceeded, GraphError
from prismdim.families import EdgeVariant, FamilySpec, prism_petersen
from prismdim.graph import (
    Graph,
    all_pairs_distances,
    format_dot,
    format_edge_list,
    graph_hash,
    read_edge_list,
)
from prismdim.resolving import is_fault_tolerant, is_resolving, representation, unresolved_pairs
from prismdim.search import Budget, greedy_resolving_set, min_fault_tolerant_set, min_resolving_set

ENV_SUBSETS = "PRISMDIM_BUDGET_SUBSETS"
ENV_SECONDS = "PRISMDIM_BUDGET_SECONDS"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def _env_number(name: str, cast: type) -> Any:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not a valid number") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prismdim", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"prismdim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: Sequence[str], graph_input: bool = True) -> None:
        if graph_input:
            src = p.add_mutually_exclusive_group()
            src.add_argument("--graph", metavar="FILE", help="edge-list file")
            src.add_argument(
                "--family",
                choices=["prism-petersen", "petersen", "cycle", "path", "prism", "random"],
            )
            p.add_argument("--n", type=int, help="family size parameter")
            p.add_argument("--m", type=int, help="petersen skip")
            p.add_argument("--p", type=float, default=0.3, help="edge probability (random family)")
            p.add_argument("--seed", type=int, default=0, help="seed (random family only)")
        p.add_argument("--variant", choices=[v.value for v in EdgeVariant], default="repaired")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--budget-subsets", type=int, default=None)
        p.add_argument("--budget-seconds", type=float, default=None)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--timing", action="store_true", help="include wall times (not reproducible)")

    common(sub.add_parser("gen", help="emit a graph"), ["edgelist", "dot", "json"])
    p = sub.add_parser("dim", help="metric dimension")
    common(p, ["json", "text"])
    p.add_argument("--greedy", action="store_true", help="greedy upper bound instead of exact search")
    common(sub.add_parser("ftdim", help="fault-tolerant metric dimension"), ["json", "text"])
    p = sub.add_parser("verify-set", help="check a landmark set")
    common(p, ["json", "text"])
    p.add_argument("--landmarks", required=True, help="comma-separated labels or ids")
    common(sub.add_parser("bounds", help="ball-size and fault-tolerance bounds"), ["json", "text"])
    p = sub.add_parser("claims", help="audit claimed representations")
    common(p, ["json", "text"], graph_input=False)
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--n", type=int)
    grp.add_argument("--sweep", type=int, metavar="N_MAX")
    p.add_argument("--compare-stated-arity", action="store_true")
    p.add_argument("--no-min-dim", action="store_true", help="skip the exact dimension search")
    p = sub.add_parser("report", help="dim + ftdim + bounds + claims for one graph")
    common(p, ["json", "text"])
    return parser


def _budget(args: argparse.Namespace) -> Budget:
    subsets = args.budget_subsets if args.budget_subsets is not None else _env_number(ENV_SUBSETS, int)
    seconds = args.budget_seconds if args.budget_seconds is not None else _env_number(ENV_SECONDS, float)
    return Budget(subsets, seconds)


def _load_graph(args: argparse.Namespace) -> tuple[Graph, dict[str, Any]]:
    if args.graph and args.family:
        raise UsageError("give exactly one of --graph and --family")
    if args.graph:
        return read_edge_list(args.graph), {"graph": args.graph}
    if not args.family:
        raise UsageError("an input is required: --graph FILE or --family KIND --n N")
    if args.n is None:
        raise UsageError("--family needs --n")
    if args.family == "random":
        echo = {"family": "random", "n": args.n, "p": args.p, "seed": args.seed}
        return random_connected_graph(args.n, args.p, args.seed), echo
    spec = FamilySpec(args.family, args.n, args.m, EdgeVariant(args.variant))
    echo: dict[str, Any] = {"family": spec.kind, "n": spec.n}
    if spec.kind == "petersen":
        echo["m"] = spec.m
    if spec.kind == "prism_petersen":
        echo["variant"] = spec.edge_variant.value
    return spec.build(), echo


def _config_echo(args: argparse.Namespace, source: dict[str, Any], budget: Budget) -> dict[str, Any]:
    echo: dict[str, Any] = {"subcommand": args.command, "input": source, "format": args.format}
    echo["budget"] = {"max_subsets": budget.max_subsets, "max_seconds": budget.max_seconds}
    for key in ("greedy", "landmarks", "compare_stated_arity", "no_min_dim", "sweep"):
        if getattr(args, key, None) not in (None, False):
            echo[key] = getattr(args, key)
    return echo


def _document(args: argparse.Namespace, ghash: str | None, echo: dict[str, Any], result: Any) -> dict[str, Any]:
    return {
        "header": {"tool_version": __version__, "graph_hash": ghash, "config_echo": echo},
        "result": result,
    }


def _labels(g: Graph, vs: Sequence[int]) -> list[str]:
    return [g.label(v) for v in vs]


def _search_dict(g: Graph, res: Any, timing: bool) -> dict[str, Any]:
    out = res.to_dict(timing)
    out["witness_labels"] = _labels(g, res.witness)
    return out


def _budget_dict(exc: BudgetExceeded) -> dict[str, Any]:
    return {
        "status": exc.status,
        "reason": exc.reason,
        "size_reached": exc.size_reached,
        "nodes_explored": exc.nodes_explored,
    }


def _text(value: Any, indent: str = "") -> str:
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (int, str)) for x in v):
                lines.append(f"{indent}{k}:")
                lines.append(_text(v, indent + "  ").rstrip("\n"))
            else:
                lines.append(f"{indent}{k}: {v}")
        return "\n".join(lines) + "\n"
    if isinstance(value, list):
        return "".join(_text(v, indent) if isinstance(v, dict) else f"{indent}{v}\n" for v in value)
    return f"{indent}{value}\n"


def _emit(args: argparse.Namespace, doc: dict[str, Any], text: str | None = None) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(text if text is not None else _text(doc["result"]))


def _cmd_gen(args: argparse.Namespace, budget: Budget) -> int:
    g, source = _load_graph(args)
    if args.format == "edgelist":
        sys.stdout.write(f"# prismdim {__version__} {graph_hash(g)}\n" + format_edge_list(g))
    elif args.format == "dot":
        sys.stdout.write(format_dot(g))
    else:
        result = {
            "n_vertices": g.n_vertices,
            "edges": [list(e) for e in g.edges()],
            "labels": [g.label(v) for v in range(g.n_vertices)],
        }
        _emit(args, _document(args, graph_hash(g), _config_echo(args, source, budget), result))
    return EXIT_OK


def _cmd_dim(args: argparse.Namespace, budget: Budget, fault_tolerant: bool) -> int:
    g, source = _load_graph(args)
    echo = _config_echo(args, source, budget)
    dm = all_pairs_distances(g)
    dm.require_connected()
    if getattr(args, "greedy", False):
        W = greedy_resolving_set(dm)
        result: dict[str, Any] = {
            "status": "OK", "kind": "greedy", "size": len(W),
            "witness": list(W), "witness_labels": _labels(g, W),
        }
        _emit(args, _document(args, graph_hash(g), echo, result))
        return EXIT_OK
    try:
        if fault_tolerant:
            res = min_fault_tolerant_set(dm, budget, args.threads)
        else:
            res = min_resolving_set(dm, budget, args.threads)
    except BudgetExceeded as exc:
        _emit(args, _document(args, graph_hash(g), echo, _budget_dict(exc)))
        return EXIT_BUDGET
    _emit(args, _document(args, graph_hash(g), echo, _search_dict(g, res, args.timing)))
    return EXIT_OK


def _cmd_verify_set(args: argparse.Namespace, budget: Budget) -> int:
    g, source = _load_graph(args)
    names = [s.strip() for s in args.landmarks.split(",") if s.strip()]
    try:
        W = tuple(g.vertex(int(s) if s.isdigit() else s) for s in names)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    dm = all_pairs_distances(g)
    dm.require_connected()
    result = {
        "landmarks": _labels(g, W),
        "resolving": is_resolving(dm, W),
        "fault_tolerant": bool(W) and is_fault_tolerant(dm, W),
        "unresolved_pairs": [_labels(g, p) for p in unresolved_pairs(dm, W)],
        "representations": {g.label(v): list(representation(dm, v, W)) for v in range(g.n_vertices)},
    }
    _emit(args, _document(args, graph_hash(g), _config_echo(args, source, budget), result))
    return EXIT_OK


def _cmd_bounds(args: argparse.Namespace, budget: Budget) -> int:
    g, source = _load_graph(args)
    echo = _config_echo(args, source, budget)
    try:
        reports = audit_bounds(g, budget, args.threads)
    except BudgetExceeded as exc:
        _emit(args, _document(args, graph_hash(g), echo, _budget_dict(exc)))
        return EXIT_BUDGET
    result = [r.to_dict() for r in reports]
    _emit(args, _document(args, graph_hash(g), echo, result))
    return EXIT_OK


def _cmd_claims(args: argparse.Namespace, budget: Budget) -> int:
    source: dict[str, Any] = {"family": "prism_petersen", "variant": args.variant}
    echo = _config_echo(args, source, budget)
    if args.n is not None:
        echo["input"]["n"] = args.n
        rep = verify_claims(
            args.n, args.variant, args.compare_stated_arity,
            min_dimension=not args.no_min_dim, budget=budget, threads=args.threads,
        )
        ghash = graph_hash(prism_petersen(args.n, args.variant))
        _emit(args, _document(args, ghash, echo, rep.to_dict()), format_report_text(rep))
        return EXIT_OK
    reps = verify_all_claims(
        args.sweep, args.variant, min_dimension=not args.no_min_dim, budget=budget, threads=args.threads
    )
    table = summary_table(reps)
    docs = []
    for rep in reps:
        d = rep.to_dict()
        if "error" not in d:
            d["graph_hash"] = graph_hash(prism_petersen(rep.n, args.variant))
        docs.append(d)
    text = "".join(format_report_text(r) for r in reps if not hasattr(r, "error"))
    text += "\n" + format_summary_table(table)
    _emit(args, _document(args, None, echo, {"reports": docs, "summary_table": table}), text)
    return EXIT_OK


def _cmd_report(args: argparse.Namespace, budget: Budget) -> int:
    g, source = _load_graph(args)
    echo = _config_echo(args, source, budget)
    dm = all_pairs_distances(g)
    dm.require_connected()
    result: dict[str, Any] = {}
    status = EXIT_OK
    try:
        basis = min_resolving_set(dm, budget, args.threads)
        result["dim"] = _search_dict(g, basis, args.timing)
        ft = min_fault_tolerant_set(dm, budget, args.threads, beta=basis.dimension)
        result["ftdim"] = _search_dict(g, ft, args.timing)
        result["bounds"] = [r.to_dict() for r in audit_bounds(g, budget, args.threads, dm)]
    except BudgetExceeded as exc:
        result["budget"] = _budget_dict(exc)
        status = EXIT_BUDGET
    if source.get("family") == "prism_petersen":
        result["claims"] = verify_claims(
            args.n, args.variant, budget=budget, threads=args.threads
        ).to_dict()
    _emit(args, _document(args, graph_hash(g), echo, result))
    return status


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        budget = _budget(args)
        if args.command == "gen":
            return _cmd_gen(args, budget)
        if args.command in ("dim", "ftdim"):
            return _cmd_dim(args, budget, args.command == "ftdim")
        if args.command == "verify-set":
            return _cmd_verify_set(args, budget)
        if args.command == "bounds":
            return _cmd_bounds(args, budget)
        if args.command == "claims":
            return _cmd_claims(args, budget)
        return _cmd_report(args, budget)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"prismdim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, ValueError, OSError) as exc:
        print(f"prismdim: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
