"""Dense decompositions by exhaustive search, exact arithmetic throughout.

Two variants. Contraction (supermodular f): repeatedly take the unique
maximal subset maximizing f(S)/|S|, contract it, continue; the densities
strictly decrease. Deletion (submodular monotone f with f({v}) > 0):
repeatedly take the unique minimal S minimizing
(|V'| - |S|) / (f(V') - f(S)); the removed block V' - S gets that ratio and
the ratios strictly increase. Uniqueness comes from maximizers being closed
under union and minimizers under intersection, which the code exploits and
asserts rather than trusts: the union (resp. intersection) of the optima is
recomputed and must itself be optimal, otherwise the declared structure of
the oracle was wrong.

The density vector assigns every element the density of its block
(contraction variant) or the reciprocal of its block's ratio (deletion
variant, so the values telescope to f(V)); it is the minimum-norm point of
the base polytope and the unique lexicographically extreme base.

Everything here enumerates subsets, so ground sets are capped at 20.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    DegenerateDecompositionError,
    GroundSetTooLargeError,
    OracleFlagError,
)
from .polytope import BaseVector, DensityVector, enumerate_base_vertices
from .setfn import SUBMODULAR, SUPERMODULAR, SetFunctionOracle, dualize

CONTRACTION = "supermodular_contraction"
DELETION = "submodular_deletion"

_ENUM_CAP = 20


@dataclass(frozen=True)
class DenseDecomposition:
    """Ordered blocks with their densities (contraction variant, strictly
    decreasing) or ratios (deletion variant, strictly increasing)."""

    variant: str
    blocks: tuple[tuple[int, ...], ...]
    densities: tuple[Fraction, ...]

    def __post_init__(self):
        if self.variant not in (CONTRACTION, DELETION):
            raise ValueError(f"unknown variant {self.variant!r}")
        if len(self.blocks) != len(self.densities):
            raise ValueError("blocks/densities length mismatch")

    def element_block(self, v: int) -> int:
        for i, b in enumerate(self.blocks):
            if v in b:
                return i
        raise KeyError(v)

    def to_json_dict(self) -> dict:
        return {
            "variant": self.variant,
            "blocks": [
                {"elements": sorted(b), "density": str(d)}
                for b, d in zip(self.blocks, self.densities)
            ],
        }


def _check_cap(f: SetFunctionOracle):
    if len(f.ground) > _ENUM_CAP:
        raise GroundSetTooLargeError(
            f"subset enumeration limited to {_ENUM_CAP} elements, got {len(f.ground)}"
        )


def _subsets_of(elems: tuple[int, ...], include_empty: bool):
    n = len(elems)
    start = 0 if include_empty else 1
    for mask in range(start, 1 << n):
        yield frozenset(elems[i] for i in range(n) if mask >> i & 1)


def densest_set_bruteforce(f: SetFunctionOracle) -> tuple[frozenset[int], Fraction]:
    """Maximal maximizer of f(S)/|S| over nonempty S, by full enumeration.

    The union of all maximizers is returned; supermodularity makes it a
    maximizer itself, and that is re-checked so a mis-flagged oracle fails
    loudly instead of silently.
    """
    if f.kind != SUPERMODULAR:
        raise OracleFlagError("densest_set_bruteforce needs a supermodular oracle")
    _check_cap(f)
    best: Fraction | None = None
    union: set[int] = set()
    for s in _subsets_of(f.ground, include_empty=False):
        d = Fraction(f._eval(s), len(s))
        if best is None or d > best:
            best = d
            union = set(s)
        elif d == best:
            union |= s
    assert best is not None
    top = frozenset(union)
    if Fraction(f._eval(top), len(top)) != best:
        raise OracleFlagError("maximizers not closed under union; oracle is not supermodular")
    return top, best


def decompose_supermodular(f: SetFunctionOracle) -> DenseDecomposition:
    """Contraction-variant decomposition: peel off the maximal densest set,
    contract, repeat. Densities strictly decrease."""
    if f.kind != SUPERMODULAR:
        raise OracleFlagError("decompose_supermodular needs a supermodular oracle")
    _check_cap(f)
    remaining = tuple(f.ground)
    acc: frozenset[int] = frozenset()
    f_acc = f._eval(acc)
    blocks: list[tuple[int, ...]] = []
    densities: list[Fraction] = []
    while remaining:
        best: Fraction | None = None
        union: set[int] = set()
        for s in _subsets_of(remaining, include_empty=False):
            d = Fraction(f._eval(s | acc) - f_acc, len(s))
            if best is None or d > best:
                best = d
                union = set(s)
            elif d == best:
                union |= s
        top = frozenset(union)
        if Fraction(f._eval(top | acc) - f_acc, len(top)) != best:
            raise OracleFlagError("maximizers not closed under union; oracle is not supermodular")
        if densities and best >= densities[-1]:
            raise OracleFlagError("block densities failed to decrease strictly")
        blocks.append(tuple(sorted(top)))
        densities.append(best)
        acc = acc | top
        f_acc = f._eval(acc)
        remaining = tuple(e for e in remaining if e not in top)
    return DenseDecomposition(CONTRACTION, tuple(blocks), tuple(densities))


def decompose_submodular_deletion(f: SetFunctionOracle) -> DenseDecomposition:
    """Deletion-variant decomposition of a submodular, monotone, normalized
    oracle with f({v}) > 0 for every element. Ratios strictly increase."""
    if f.kind != SUBMODULAR:
        raise OracleFlagError("decompose_submodular_deletion needs a submodular oracle")
    if not (f.monotone and f.normalized):
        raise OracleFlagError("deletion decomposition needs a monotone, normalized oracle")
    _check_cap(f)
    for v in f.ground:
        if f._eval(frozenset([v])) <= 0:
            raise OracleFlagError(f"deletion decomposition needs f({{{v}}}) > 0")
    cur = tuple(f.ground)
    f_cur = f._eval(frozenset(cur))
    blocks: list[tuple[int, ...]] = []
    ratios: list[Fraction] = []
    while cur:
        best: Fraction | None = None
        inter: set[int] | None = None
        for s in _subsets_of(cur, include_empty=True):
            if len(s) == len(cur):
                continue
            fs = f._eval(s)
            if fs >= f_cur:
                continue
            ratio = Fraction(len(cur) - len(s), f_cur - fs)
            if best is None or ratio < best:
                best = ratio
                inter = set(s)
            elif ratio == best:
                inter &= s
        if best is None:
            raise DegenerateDecompositionError(
                "no proper subset drops the value; f(V') = f(S) everywhere"
            )
        assert inter is not None
        core = frozenset(inter)
        f_core = f._eval(core)
        if f_core >= f_cur or Fraction(len(cur) - len(core), f_cur - f_core) != best:
            raise OracleFlagError(
                "minimizers not closed under intersection; oracle is not submodular"
            )
        if ratios and best <= ratios[-1]:
            raise OracleFlagError("block ratios failed to increase strictly")
        blocks.append(tuple(sorted(set(cur) - core)))
        ratios.append(best)
        cur = tuple(e for e in cur if e in core)
        f_cur = f_core
    return DenseDecomposition(DELETION, tuple(blocks), tuple(ratios))


def density_vector(f: SetFunctionOracle) -> DensityVector:
    """Per-element densities from the matching decomposition variant.

    Supermodular: the density of the element's contraction block.
    Submodular: the value-per-element of the element's deletion block,
    i.e. the reciprocal of the block ratio. Either way the result is a base
    of the polytope and the minimum-norm point.
    """
    if f.kind == SUPERMODULAR:
        dec = decompose_supermodular(f)
        per_block = dec.densities
    else:
        dec = decompose_submodular_deletion(f)
        per_block = tuple(1 / r for r in dec.densities)
    value_of: dict[int, Fraction] = {}
    for block, val in zip(dec.blocks, per_block):
        for e in block:
            value_of[e] = val
    return BaseVector(f.ground, tuple(value_of[e] for e in f.ground))


def certify_lex_optimal(f: SetFunctionOracle, x) -> bool:
    """First-order optimality of x for min sum(x^2) over the base polytope:
    <x, v> >= <x, x> for every vertex v. Exact arithmetic, ground <= 7."""
    vals = x.values if isinstance(x, BaseVector) else tuple(x)
    q = [v if isinstance(v, (int, Fraction)) else Fraction(v) for v in vals]
    xx = sum(v * v for v in q)
    for vert in enumerate_base_vertices(f):
        if sum(a * b for a, b in zip(q, vert.values)) < xx:
            return False
    return True


def verify_decomposition_equivalence(f: SetFunctionOracle) -> bool:
    """Deletion blocks of f coincide with contraction blocks of its dual,
    with reciprocal densities."""
    dele = decompose_submodular_deletion(f)
    cont = decompose_supermodular(dualize(f))
    if dele.blocks != cont.blocks:
        return False
    return all(cd == 1 / dr for cd, dr in zip(cont.densities, dele.densities))
