"""Peeling as an approximate linear minimization oracle.

weighted_greedy repeatedly removes the vertex minimizing w(u) + deg(u) in
the remaining graph and records its degree at removal time; each edge is
charged to whichever endpoint leaves first, so the recorded vector is the
load of an integral orientation and hence a base of the edge-count
polytope. weighted_supergreedy generalizes the rule to w(u) + f(u | rest)
for any supermodular oracle; the last element records f({u}) so the
recorded marginals still telescope to f(V).

greedy_pp / supergreedy_pp iterate the peel with cumulative weights: after
k rounds the cumulative load vector w_k equals k * b^(k), where b^(k) is
the averaging-schedule Frank-Wolfe iterate driven by this noisy oracle.
The best suffix density seen anywhere (including the full set, and the
first round is plain unweighted peeling) is tracked exactly.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .fw import ConvergenceTrace, TraceRecord
from .graph import MultiGraph
from .polytope import BaseVector
from .setfn import SetFunctionOracle


@dataclass(frozen=True)
class PeelResult:
    """One peeling pass: removal order, recorded marginals (a base vector),
    and the exact density of every suffix of the order (the first suffix is
    the whole ground set)."""

    order: tuple[int, ...]
    dhat: BaseVector
    suffix_densities: tuple[Fraction, ...]


def weighted_greedy(g: MultiGraph, w: Sequence) -> PeelResult:
    """Peel argmin w(u) + deg(u), ties to the smaller vertex index.

    Lazy binary heap: stale entries are skipped by comparing the stored
    degree against the live one. Integer weights stay exact.
    """
    n = g.n
    if len(w) != n:
        raise ValueError(f"expected {n} weights, got {len(w)}")
    deg = [g.degree(v) for v in range(n)]
    adj = g.adjacency
    alive = [True] * n
    heap = [(w[u] + deg[u], u, deg[u]) for u in range(n)]
    heapq.heapify(heap)
    order: list[int] = []
    dhat: list[int] = [0] * n
    densities: list[Fraction] = []
    edges_left = g.m
    for step in range(n):
        while True:
            _, u, du = heapq.heappop(heap)
            if alive[u] and du == deg[u]:
                break
        densities.append(Fraction(edges_left, n - step))
        order.append(u)
        dhat[u] = deg[u]
        alive[u] = False
        edges_left -= deg[u]
        for x in adj[u]:
            if alive[x]:
                deg[x] -= 1
                heapq.heappush(heap, (w[x] + deg[x], x, deg[x]))
    return PeelResult(tuple(order), BaseVector(tuple(range(n)), tuple(dhat)), tuple(densities))


def weighted_supergreedy(f: SetFunctionOracle, w: Sequence) -> PeelResult:
    """Peel argmin w(u) + f(u | rest) from a supermodular oracle; the final
    element records f of its own singleton. Marginals are recomputed each
    round, so this is O(n^2) oracle calls."""
    if f.kind != "supermodular":
        raise ValueError("weighted_supergreedy needs a supermodular oracle")
    ground = list(f.ground)
    n = len(ground)
    if len(w) != n:
        raise ValueError(f"expected {n} weights, got {len(w)}")
    pos = {e: i for i, e in enumerate(ground)}
    remaining = set(ground)
    order: list[int] = []
    dhat: list = [0] * n
    densities: list[Fraction] = []
    while remaining:
        cur = frozenset(remaining)
        fcur = f._eval(cur)
        densities.append(Fraction(fcur, len(cur)))
        if len(remaining) == 1:
            u = next(iter(remaining))
            order.append(u)
            dhat[pos[u]] = fcur  # f({u}): keeps the totals at f(V)
            break
        best_key = None
        best_u = None
        best_marg = None
        for u in sorted(remaining):
            marg = fcur - f._eval(cur - {u})
            key = (w[pos[u]] + marg, u)
            if best_key is None or key < best_key:
                best_key, best_u, best_marg = key, u, marg
        order.append(best_u)
        dhat[pos[best_u]] = best_marg
        remaining.remove(best_u)
    return PeelResult(tuple(order), BaseVector(tuple(ground), tuple(dhat)), tuple(densities))


@dataclass
class GreedyPPResult:
    """Outcome of iterated peeling.

    best_set/best_density: densest suffix seen anywhere, exact arithmetic,
    first strict improvement wins ties. loads: final cumulative marginal
    vector (equals iterations * b^(final) exactly). b_trace: per-iteration
    averaged vectors as exact rationals, retained only on request.
    """

    best_set: frozenset[int]
    best_density: Fraction
    loads: tuple
    iterations: int
    trace: ConvergenceTrace
    b_trace: Optional[list[BaseVector]] = None

    def to_json_dict(self) -> dict:
        return {
            "best_set": sorted(self.best_set),
            "best_density": str(Fraction(self.best_density)),
            "iterations": self.iterations,
        }


def _iterated_peel(
    ground: tuple[int, ...],
    peel_once,
    full_value,
    iterations: int,
    ref,
    stop_dist,
    keep_b_trace: bool,
) -> GreedyPPResult:
    n = len(ground)
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    w: list = [0] * n
    pos = {e: i for i, e in enumerate(ground)}
    best_density = Fraction(full_value, n)
    best_set = frozenset(ground)
    refv = None if ref is None else [float(v) for v in (ref.values if isinstance(ref, BaseVector) else ref)]
    trace = ConvergenceTrace()
    b_trace: Optional[list[BaseVector]] = [] if keep_b_trace else None
    done = 0
    for k in range(1, iterations + 1):
        pr = peel_once(w)
        for e, d in zip(pr.dhat.ground, pr.dhat.values):
            w[pos[e]] += d
        for i, dens in enumerate(pr.suffix_densities):
            if dens > best_density:
                best_density = dens
                best_set = frozenset(pr.order[i:])
        num = sum(v * v for v in w)
        objective = num / (k * k) if isinstance(num, int) else float(num) / (k * k)
        dist = None
        if refv is not None:
            dist = math.sqrt(sum((float(v) / k - r) ** 2 for v, r in zip(w, refv)))
        trace.records.append(TraceRecord(k=k, objective=float(objective), gamma=1.0 / k, dist_ref=dist))
        if b_trace is not None:
            b_trace.append(BaseVector(ground, tuple(Fraction(v, k) if isinstance(v, int) else v / k for v in w)))
        done = k
        if stop_dist is not None and dist is not None and dist <= stop_dist:
            break
    return GreedyPPResult(best_set, best_density, tuple(w), done, trace, b_trace)


def greedy_pp(
    g: MultiGraph,
    iterations: int,
    ref=None,
    stop_dist: Optional[float] = None,
    keep_b_trace: bool = False,
) -> GreedyPPResult:
    """Iterated degree peeling with cumulative integer weights. One
    iteration is plain unweighted peeling; the densest suffix across all
    iterations is the reported set."""
    return _iterated_peel(
        tuple(range(g.n)),
        lambda w: weighted_greedy(g, w),
        g.m,
        iterations,
        ref,
        stop_dist,
        keep_b_trace,
    )


def supergreedy_pp(
    f: SetFunctionOracle,
    iterations: int,
    ref=None,
    stop_dist: Optional[float] = None,
    keep_b_trace: bool = False,
) -> GreedyPPResult:
    """Iterated supermodular peeling with cumulative rational weights."""
    return _iterated_peel(
        f.ground,
        lambda w: weighted_supergreedy(f, w),
        f._eval(f.ground_set),
        iterations,
        ref,
        stop_dist,
        keep_b_trace,
    )
