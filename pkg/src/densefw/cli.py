"""Command line interface.

Subcommands read an edge-list file and print one JSON object to stdout (or
--out). Rationals serialize as "p/q" strings in lowest terms, floats with
12 significant digits; identical inputs and flags produce byte-identical
output. Exit codes: 0 success, 2 malformed input, 3 structurally
infeasible request (disconnected graph, ground set too large, degenerate
oracle), 64 unknown subcommand or flag.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import checks, decomp, fw, peel, polytope, setfn, treepack
from .errors import (
    DegenerateDecompositionError,
    DisconnectedGraphError,
    GraphParseError,
    GroundSetTooLargeError,
    OracleFlagError,
)
from .graph import MultiGraph, parse_edge_list

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_USAGE = 64

_REF_SIZE_CAP = 12  # compute exact reference vectors for traces up to this size


@dataclass
class RunConfig:
    """Parsed invocation: which command, on what input, with what knobs."""

    command: str
    path: str
    iters: int = 100
    epsilon: Optional[float] = None
    schedule: str = "avg"
    variant: str = "sup"
    fn: str = "edges"
    mode: str = "greedy"
    out: Optional[str] = None
    trace: Optional[str] = None
    exact: bool = False
    seed: Optional[int] = None  # reserved; tie-breaking is deterministic


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt(x) -> object:
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    return float(format(float(x), ".12g"))


def _build_parser() -> _Parser:
    p = _Parser(prog="densefw", description="Dense decompositions, peeling, and tree packing.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, iters_default=100):
        sp.add_argument("path", help="edge-list file (lines 'u v', '#' comments)")
        sp.add_argument("--iters", "-T", type=int, default=iters_default)
        sp.add_argument("--epsilon", type=float, default=None, help="early stop on distance to the exact optimum")
        sp.add_argument("--out", default=None, help="write the JSON result here instead of stdout")
        sp.add_argument("--trace", default=None, help="write a per-iteration CSV trace here")
        sp.add_argument("--seed", type=int, default=None, help="reserved")

    sp = sub.add_parser("density", help="densest subgraph by exhaustive search")
    sp.add_argument("path")
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("decompose", help="dense decomposition")
    sp.add_argument("path")
    sp.add_argument("--variant", choices=["sup", "sub-del"], default="sup")
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("greedypp", help="iterated degree peeling")
    common(sp)

    sp = sub.add_parser("supergreedypp", help="iterated supermodular peeling")
    common(sp)
    sp.add_argument("--fn", choices=["edges", "rank-dual"], default="edges")

    sp = sub.add_parser("treepack", help="greedy spanning tree packing")
    common(sp, iters_default=10000)
    sp.add_argument("--mode", choices=["greedy", "fw"], default="greedy")
    sp.add_argument("--schedule", choices=["avg", "standard"], default="avg")

    sp = sub.add_parser("idealloads", help="exact ideal tree-packing loads")
    sp.add_argument("path")
    sp.add_argument("--out", default=None)

    sp = sub.add_parser("fw-qp", help="Frank-Wolfe on the edge-count quadratic program")
    common(sp, iters_default=1000)
    sp.add_argument("--schedule", choices=["avg", "standard"], default="avg")
    sp.add_argument("--exact", action="store_true", help="exact rational iterates (at most 20 iterations)")

    sp = sub.add_parser("verify", help="run the invariant suite on the instance")
    sp.add_argument("path")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out", default=None)
    return p


def _emit(obj: dict, out: Optional[str]) -> None:
    text = json.dumps(obj, separators=(",", ":")) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> MultiGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _edge_ref(g: MultiGraph):
    if g.n <= _REF_SIZE_CAP:
        return decomp.density_vector(setfn.edge_count_fn(g))
    return None


def _cmd_density(cfg: RunConfig) -> int:
    g = _load_graph(cfg.path)
    best, dens = decomp.densest_set_bruteforce(setfn.edge_count_fn(g))
    _emit({"set": sorted(best), "density": str(dens)}, cfg.out)
    return EXIT_OK


def _cmd_decompose(cfg: RunConfig) -> int:
    g = _load_graph(cfg.path)
    if cfg.variant == "sup":
        f = setfn.edge_count_fn(g)
        dec = decomp.decompose_supermodular(f)
    else:
        f = setfn.graphic_rank_fn(g)
        dec = decomp.decompose_submodular_deletion(f)
    body = dec.to_json_dict()
    bstar = decomp.density_vector(f)
    body["density_vector"] = {str(e): str(v) for e, v in zip(bstar.ground, bstar.values)}
    _emit(body, cfg.out)
    return EXIT_OK


def _run_trace(cfg: RunConfig, trace) -> None:
    if cfg.trace:
        trace.write_csv(cfg.trace)


def _cmd_greedypp(cfg: RunConfig) -> int:
    g = _load_graph(cfg.path)
    ref = _edge_ref(g) if (cfg.trace or cfg.epsilon is not None) else None
    res = peel.greedy_pp(g, cfg.iters, ref=ref, stop_dist=cfg.epsilon)
    _run_trace(cfg, res.trace)
    _emit(res.to_json_dict(), cfg.out)
    return EXIT_OK


def _cmd_supergreedypp(cfg: RunConfig) -> int:
    g = _load_graph(cfg.path)
    if cfg.fn == "edges":
        f = setfn.edge_count_fn(g)
    else:
        f = setfn.dualize(setfn.graphic_rank_fn(g))
    ref = None
    if (cfg.trace or cfg.epsilon is not None) and len(f.ground) <= _REF_SIZE_CAP:
        ref = decomp.density_vector(f)
    res = peel.supergreedy_pp(f, cfg.iters, ref=ref, stop_dist=cfg.epsilon)
    _run_trace(cfg, res.trace)
    _emit(res.to_json_dict(), cfg.out)
    return EXIT_OK


def _cmd_treepack(cfg: RunConfig) -> int:
    g = _load_graph(cfg.path)
    ref = None
    if (cfg.trace or cfg.epsilon is not None) and g.m <= 20:
        ref = treepack.ideal_loads(g)
    schedule = fw.schedule_from_name(cfg.schedule)
    if cfg.mode == "greedy":
        loads, trace = treepack.greedy_tree_pack(g, cfg.iters, ref=ref, stop_dist=cfg.epsilon)
    else:
        loads, trace = treepack.fw_tree_pack(g, cfg.iters, schedule=schedule, ref=ref, stop_dist=cfg.epsilon)
    _run_trace(cfg, trace)
    _emit(
        {
            "loads": {str(e): _fmt(v) for e, v in zip(loads.ground, loads.values)},
            "iterations": len(trace.records),
        },
        cfg.out,
    )
    return EXIT_OK


def _cmd_idealloads(cfg: RunConfig) -> int:
    g = _load_graph(cfg.path)
    loads = treepack.ideal_loads(g)
    _emit({str(e): str(v) for e, v in zip(loads.ground, loads.values)}, cfg.out)
    return EXIT_OK


def _cmd_fw_qp(cfg: RunConfig) -> int:
    g = _load_graph(cfg.path)
    lmo = lambda w: polytope.optimal_orientation(g, w)[1]
    ref = _edge_ref(g) if (cfg.trace or cfg.epsilon is not None) else None
    x, trace = fw.frank_wolfe(
        lmo,
        ground=tuple(range(g.n)),
        schedule=fw.schedule_from_name(cfg.schedule),
        iterations=cfg.iters,
        ref=ref,
        exact=cfg.exact,
        stop_dist=cfg.epsilon,
    )
    _run_trace(cfg, trace)
    _emit(
        {
            "iterate": {str(v): _fmt(val) for v, val in zip(x.ground, x.values)},
            "objective": _fmt(sum(float(v) ** 2 for v in x.values)),
            "iterations": len(trace.records),
        },
        cfg.out,
    )
    return EXIT_OK


def _cmd_verify(cfg: RunConfig) -> int:
    g = _load_graph(cfg.path)
    results = checks.run_instance_checks(g, seed=cfg.seed or 0)
    ok = all(r.ok for r in results)
    _emit(
        {
            "ok": ok,
            "checks": [{"name": r.name, "ok": r.ok} for r in results],
        },
        cfg.out,
    )
    return EXIT_OK if ok else 1


_COMMANDS = {
    "density": _cmd_density,
    "decompose": _cmd_decompose,
    "greedypp": _cmd_greedypp,
    "supergreedypp": _cmd_supergreedypp,
    "treepack": _cmd_treepack,
    "idealloads": _cmd_idealloads,
    "fw-qp": _cmd_fw_qp,
    "verify": _cmd_verify,
}


def run(argv: Optional[list[str]] = None) -> int:
    """Parse argv, execute, return the exit code."""
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    cfg = RunConfig(
        command=ns.command,
        path=ns.path,
        iters=getattr(ns, "iters", 100),
        epsilon=getattr(ns, "epsilon", None),
        schedule=getattr(ns, "schedule", "avg"),
        variant=getattr(ns, "variant", "sup"),
        fn=getattr(ns, "fn", "edges"),
        mode=getattr(ns, "mode", "greedy"),
        out=getattr(ns, "out", None),
        trace=getattr(ns, "trace", None),
        exact=getattr(ns, "exact", False),
        seed=getattr(ns, "seed", None),
    )
    if cfg.iters < 1:
        print("error: --iters must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    if cfg.epsilon is not None and cfg.epsilon <= 0:
        print("error: --epsilon must be > 0", file=sys.stderr)
        return EXIT_INPUT
    try:
        return _COMMANDS[cfg.command](cfg)
    except (GraphParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (
        DisconnectedGraphError,
        GroundSetTooLargeError,
        OracleFlagError,
        DegenerateDecompositionError,
        ValueError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
