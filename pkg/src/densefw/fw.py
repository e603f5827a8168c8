"""Frank-Wolfe for min sum(x^2) over a base polytope.

The gradient of the objective is 2x, and linear minimization oracles are
scale-invariant, so the LMO is simply queried at the current iterate. Two
step schedules are supported: the standard 2/(k+2) rule and the averaging
rule 1/(k+1), under which the iterate b^(k) is exactly the mean of the
first k LMO answers (the starting point only seeds the first query). The
averaging path therefore maintains a running sum and divides, which keeps
integer LMO answers exactly countable and makes the identity
(k+1) b^(k+1) = k b^(k) + d^(k+1) literal.

`harmonic_bound` is the objective-gap guarantee for averaging steps with a
delta-approximate LMO: 2 * C * (1 + delta) * H_{k+1} / (k+1). Curvature C
for the edge-count polytope is bracketed by [2m, 2 * sum deg^2].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import NumericalError
from .graph import MultiGraph
from .polytope import BaseVector

EXACT_ITERATION_CAP = 20  # support envelope for exact-rational iterates


@dataclass(frozen=True)
class StepSchedule:
    """Step-size rule gamma_k for the update from iterate k to k+1."""

    variant: str  # "standard" or "averaging"

    def __post_init__(self):
        if self.variant not in ("standard", "averaging"):
            raise ValueError(f"unknown schedule {self.variant!r}")

    def gamma(self, k: int) -> Fraction:
        if self.variant == "averaging":
            return Fraction(1, k + 1)
        return Fraction(2, k + 2)


STANDARD = StepSchedule("standard")
AVERAGING = StepSchedule("averaging")


def schedule_from_name(name: str) -> StepSchedule:
    if name in ("avg", "averaging"):
        return AVERAGING
    if name == "standard":
        return STANDARD
    raise ValueError(f"unknown schedule name {name!r}")


@dataclass
class TraceRecord:
    k: int
    objective: float
    gamma: float
    dist_ref: Optional[float]
    iterate: Optional[tuple] = None


@dataclass
class ConvergenceTrace:
    """Per-iteration log. Row k describes iterate b^(k): the objective
    sum(b^2), the step size used to produce it, and an optional distance
    to a reference vector."""

    records: list[TraceRecord] = field(default_factory=list)

    def to_csv(self) -> str:
        lines = ["k,objective,gamma,dist_ref"]
        for r in self.records:
            dist = "" if r.dist_ref is None else format(r.dist_ref, ".12g")
            lines.append(f"{r.k},{format(r.objective, '.12g')},{format(r.gamma, '.12g')},{dist}")
        return "\n".join(lines) + "\n"

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_csv())


def frank_wolfe(
    lmo: Callable[[Sequence], BaseVector],
    x0: Optional[BaseVector] = None,
    *,
    ground: Optional[Sequence[int]] = None,
    schedule: StepSchedule = AVERAGING,
    iterations: int = 100,
    ref: Optional[Sequence] = None,
    exact: bool = False,
    stop_dist: Optional[float] = None,
    keep_iterates: bool = False,
) -> tuple[BaseVector, ConvergenceTrace]:
    """Run T iterations of Frank-Wolfe on min sum(x^2).

    x0 defaults to the LMO answer at all-zero weights (`ground` supplies the
    dimension in that case). `ref` enables the dist_ref trace column and the
    optional early stop at stop_dist. Exact mode keeps Fraction iterates and
    is capped at 20 iterations.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if exact and iterations > EXACT_ITERATION_CAP:
        raise ValueError(f"exact mode supports at most {EXACT_ITERATION_CAP} iterations")
    if x0 is None:
        if ground is None:
            raise ValueError("need x0 or ground to start")
        ground = tuple(ground)
        x0 = lmo([0] * len(ground))
    else:
        ground = tuple(x0.ground)
    n = len(ground)
    refv = None if ref is None else [float(r) for r in (ref.values if isinstance(ref, BaseVector) else ref)]

    if exact:
        x = [Fraction(v) for v in x0.values]
    else:
        x = [float(v) for v in x0.values]
    total = None  # running sum of LMO answers (averaging schedule)
    trace = ConvergenceTrace()
    averaging = schedule.variant == "averaging"

    for it in range(1, iterations + 1):
        gamma = schedule.gamma(it - 1)
        d = lmo(x).values
        if exact:
            d = [Fraction(v) for v in d]
            one = Fraction(1)
        else:
            d = [float(v) for v in d]
            one = 1.0
        if averaging:
            total = list(d) if total is None else [t + dv for t, dv in zip(total, d)]
            x = [t / it for t in total]
        else:
            g = gamma if exact else float(gamma)
            x = [(one - g) * xv + g * dv for xv, dv in zip(x, d)]
        if not exact and not all(math.isfinite(v) for v in x):
            raise NumericalError(f"non-finite iterate at iteration {it}")
        objective = sum(v * v for v in x)
        dist = None
        if refv is not None:
            dist = math.sqrt(sum((float(v) - r) ** 2 for v, r in zip(x, refv)))
        trace.records.append(
            TraceRecord(
                k=it,
                objective=float(objective),
                gamma=float(gamma),
                dist_ref=dist,
                iterate=tuple(x) if keep_iterates else None,
            )
        )
        if stop_dist is not None and dist is not None and dist <= stop_dist:
            break
    return BaseVector(ground, tuple(x)), trace


def harmonic_number(n: int) -> Fraction:
    """H_n as an exact rational (small n only; denominators grow fast)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


def harmonic_numbers_float(upto: int) -> list[float]:
    """[H_0, H_1, ..., H_upto] as floats, for bound checks over long runs."""
    h = [0.0] * (upto + 1)
    acc = 0.0
    for i in range(1, upto + 1):
        acc += 1.0 / i
        h[i] = acc
    return h


def harmonic_bound(k: int, curvature_upper, delta) -> Fraction:
    """Objective-gap bound 2 * C * (1 + delta) * H_{k+1} / (k+1) at iterate k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    c = Fraction(curvature_upper)
    d = Fraction(delta)
    return 2 * c * (1 + d) * harmonic_number(k + 1) / (k + 1)


def curvature_bounds(g: MultiGraph) -> tuple[int, int]:
    """(2m, 2 * sum deg^2): bracket for the edge-count polytope curvature,
    the worst-case 2 ||s - x||^2 over pairs of feasible points."""
    sq = sum(g.degree(v) ** 2 for v in range(g.n))
    return 2 * g.m, 2 * sq

def delta_for_graph(g: MultiGraph) -> Fraction:
    """LMO inaccuracy factor sum(deg^2)/m used in the peeling analysis.

    Equals 2d on a d-regular graph. Needs m >= 1.
    """
    if g.m == 0:
        raise ValueError("delta undefined for empty edge set")
    return Fraction(sum(g.degree(v) ** 2 for v in range(g.n)), g.m)
