"""Instance-level invariant checks.

Everything here re-derives a claim by brute force on a single graph:
orientation loads versus the base polytope, greedy LMO answers versus
enumerated vertices, peeling error bounds, decomposition structure, tree
packing against partition enumeration. The CLI `verify` subcommand runs
the whole list with size guards; the test suite calls the pieces directly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import decomp, fw, peel, polytope, setfn, treepack
from .graph import MultiGraph, is_connected


def integral_orientation_loads(g: MultiGraph) -> np.ndarray:
    """Loads of all 2^m integral orientations, one row per orientation."""
    if g.m > 10:
        raise ValueError("orientation enumeration limited to 10 edges")
    rows = np.zeros((1 << g.m, g.n), dtype=np.int64)
    for mask in range(1 << g.m):
        for i, (u, v) in enumerate(g.edges):
            rows[mask, u if mask >> i & 1 else v] += 1
    return rows


def curvature_witness(g: MultiGraph) -> int:
    """max over integral orientation pairs of 2 * ||s - x||^2.

    Lands in [2m, 2 * sum deg^2]; the witness pair certifies the lower end
    of the curvature bracket.
    """
    loads = integral_orientation_loads(g)
    sq = np.einsum("ij,ij->i", loads, loads)
    gram = loads @ loads.T
    d2 = sq[:, None] + sq[None, :] - 2 * gram
    return 2 * int(d2.max())


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def run_instance_checks(g: MultiGraph, seed: int = 0) -> list[CheckResult]:
    """Run every size-appropriate invariant check against one graph."""
    rng = random.Random(seed)
    out: list[CheckResult] = []

    def add(name: str, ok: bool, detail: str = ""):
        out.append(CheckResult(name, bool(ok), detail))

    f_edges = setfn.edge_count_fn(g)
    f_rank = setfn.graphic_rank_fn(g)

    if g.n <= 8:
        add("edge_count_supermodular", setfn.check_kind(f_edges) and setfn.check_monotone(f_edges) and setfn.check_normalized(f_edges))
    if g.m <= 8:
        add("graphic_rank_submodular", setfn.check_kind(f_rank) and setfn.check_monotone(f_rank) and setfn.check_normalized(f_rank))
        dual = setfn.dualize(f_rank)
        back = setfn.dualize(dual)
        add(
            "dualize_involution",
            all(back.value(s) == f_rank.value(s) for s in _subsets(f_rank.ground)),
        )

    if g.n <= 20:
        for trial in range(5):
            w = [rng.randint(0, 12) for _ in range(g.n)]
            d = polytope.lmo_contrapolymatroid(f_edges, w)
            if not polytope.verify_base(f_edges, d):
                add("lmo_output_is_base", False, f"trial {trial}")
                break
        else:
            add("lmo_output_is_base", True)

    if g.n <= 6:
        verts = polytope.enumerate_base_vertices(f_edges, limit=6)
        ok = True
        for _ in range(20):
            w = [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(g.n)]
            got = polytope.lmo_contrapolymatroid(f_edges, w).dot(w)
            want = min(v.dot(w) for v in verts)
            if got != want:
                ok = False
                break
        add("edmonds_minimizes", ok)

    if g.m <= 10:
        loads = integral_orientation_loads(g)
        distinct = {tuple(int(x) for x in row) for row in loads}
        add("orientation_loads_are_bases", all(polytope.verify_base(f_edges, row) for row in distinct))
        if g.n <= 6:
            verts = {v.values for v in polytope.enumerate_base_vertices(f_edges, limit=6)}
            add("vertices_are_orientations", all(v in distinct for v in verts))
        lo, hi = fw.curvature_bounds(g)
        wit = curvature_witness(g)
        add("curvature_bracket", lo <= wit <= hi, f"2m={lo} witness={wit} cap={hi}")

    if g.m >= 1:
        sq = sum(g.degree(v) ** 2 for v in range(g.n))
        ok = True
        for _ in range(10):
            w = [rng.randint(0, 15) for _ in range(g.n)]
            dhat = peel.weighted_greedy(g, w).dhat
            _, dstar = polytope.optimal_orientation(g, w)
            if dhat.dot(w) > dstar.dot(w) + sq:
                ok = False
                break
        add("peel_error_bound", ok)

    if g.n <= 12:
        dec = decomp.decompose_supermodular(f_edges)
        strictly = all(a > b for a, b in zip(dec.densities, dec.densities[1:]))
        add("contraction_densities_decrease", strictly)
        bstar = decomp.density_vector(f_edges)
        add("density_vector_is_base", polytope.verify_base(f_edges, bstar))
        if g.n <= 7:
            add("density_vector_certified", decomp.certify_lex_optimal(f_edges, bstar))
    if 1 <= g.m <= 9:
        add("decomposition_equivalence", decomp.verify_decomposition_equivalence(f_rank))

    if is_connected(g) and g.n >= 2 and g.n <= 10 and g.m <= 20:
        ideal = treepack.ideal_loads(g)
        ref = treepack.tnw_ideal_loads(g)
        add("ideal_loads_match_partitions", ideal.values == ref.values)
        add("ideal_loads_are_base", polytope.verify_base(f_rank, ideal))
        one_over_tau = 1 / treepack.tnw_strength(g)
        add("max_load_is_inv_strength", max(ideal.values) == one_over_tau)
    return out


def _subsets(elems):
    from itertools import combinations

    for r in range(len(elems) + 1):
        yield from (frozenset(c) for c in combinations(elems, r))
