"""Exact decompositions, density vectors, and optimality certificates."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from conftest import (
    canonical_graphs,
    k4,
    p3,
    random_multigraph,
    single_edge,
    star,
    three_tier,
    tri_pendant,
    triangle,
)
from densefw import (
    DenseDecomposition,
    MultiGraph,
    SetFunctionOracle,
    certify_lex_optimal,
    decompose_submodular_deletion,
    decompose_supermodular,
    densest_set_bruteforce,
    density_vector,
    dualize,
    edge_count_fn,
    enumerate_base_vertices,
    graphic_rank_fn,
    verify_base,
    verify_decomposition_equivalence,
)
from densefw.decomp import CONTRACTION, DELETION
from densefw.errors import (
    DegenerateDecompositionError,
    GroundSetTooLargeError,
    OracleFlagError,
)
from densefw.setfn import SUBMODULAR, SUPERMODULAR


def modular(ground, per_element, kind=SUPERMODULAR):
    c = Fraction(per_element)
    return SetFunctionOracle(tuple(ground), kind, True, True, lambda s: c * len(s))


def big_path_graph(n=21):
    return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))


class TestDensestSet:
    def test_triangle(self):
        assert densest_set_bruteforce(edge_count_fn(triangle())) == (
            frozenset({0, 1, 2}), Fraction(1))

    def test_three_tier_core(self):
        s, d = densest_set_bruteforce(edge_count_fn(three_tier()))
        assert s == frozenset({0, 1, 2, 3})
        assert d == Fraction(3, 2)

    def test_star_prefers_the_whole_graph(self):
        s, d = densest_set_bruteforce(edge_count_fn(star()))
        assert s == frozenset({0, 1, 2, 3})
        assert d == Fraction(3, 4)

    def test_kind_enforced(self):
        with pytest.raises(OracleFlagError):
            densest_set_bruteforce(graphic_rank_fn(triangle()))

    def test_size_cap(self):
        with pytest.raises(GroundSetTooLargeError):
            densest_set_bruteforce(edge_count_fn(big_path_graph()))

    def test_misdeclared_oracle_fails_loudly(self):
        rank_as_super = SetFunctionOracle(
            (0, 1, 2), SUPERMODULAR, True, True, graphic_rank_fn(triangle())._eval
        )
        with pytest.raises(OracleFlagError):
            densest_set_bruteforce(rank_as_super)


class TestContractionDecomposition:
    def test_three_tier_blocks(self):
        dec = decompose_supermodular(edge_count_fn(three_tier()))
        assert dec.variant == CONTRACTION
        assert dec.blocks == ((0, 1, 2, 3), (4, 5, 6), (7,))
        assert dec.densities == (Fraction(3, 2), Fraction(4, 3), Fraction(1))

    def test_triangle_single_block(self):
        dec = decompose_supermodular(edge_count_fn(triangle()))
        assert dec.blocks == ((0, 1, 2),)
        assert dec.densities == (Fraction(1),)

    def test_modular_oracle_is_one_flat_block(self):
        dec = decompose_supermodular(modular((0, 1, 2, 3), Fraction(5, 2)))
        assert dec.blocks == ((0, 1, 2, 3),)
        assert dec.densities == (Fraction(5, 2),)

    def test_densities_strictly_decrease(self):
        rng = random.Random(67)
        for _ in range(15):
            g = random_multigraph(rng)
            dec = decompose_supermodular(edge_count_fn(g))
            assert all(a > b for a, b in zip(dec.densities, dec.densities[1:]))
            assert sorted(v for blk in dec.blocks for v in blk) == list(range(g.n))

    def test_kind_enforced(self):
        with pytest.raises(OracleFlagError):
            decompose_supermodular(graphic_rank_fn(triangle()))


class TestDeletionDecomposition:
    def test_triangle_rank_single_block(self):
        dec = decompose_submodular_deletion(graphic_rank_fn(triangle()))
        assert dec.variant == DELETION
        assert dec.blocks == ((0, 1, 2),)
        assert dec.densities == (Fraction(3, 2),)

    def test_path_rank_single_block(self):
        dec = decompose_submodular_deletion(graphic_rank_fn(p3()))
        assert dec.blocks == ((0, 1),)
        assert dec.densities == (Fraction(1),)

    def test_pendant_edge_splits_off_first(self):
        dec = decompose_submodular_deletion(graphic_rank_fn(tri_pendant()))
        assert dec.blocks == ((3,), (0, 1, 2))
        assert dec.densities == (Fraction(1), Fraction(3, 2))

    def test_ratios_strictly_increase(self):
        rng = random.Random(71)
        for _ in range(15):
            g = random_multigraph(rng, n_max=6, m_max=9)
            dec = decompose_submodular_deletion(graphic_rank_fn(g))
            assert all(a < b for a, b in zip(dec.densities, dec.densities[1:]))

    def test_kind_and_flags_enforced(self):
        with pytest.raises(OracleFlagError):
            decompose_submodular_deletion(edge_count_fn(triangle()))
        not_monotone = SetFunctionOracle((0, 1), SUBMODULAR, False, True, len)
        with pytest.raises(OracleFlagError):
            decompose_submodular_deletion(not_monotone)

    def test_zero_singleton_rejected(self):
        f = SetFunctionOracle((0, 1), SUBMODULAR, True, True, lambda s: len(s & {0}))
        with pytest.raises(OracleFlagError):
            decompose_submodular_deletion(f)

    def test_degenerate_value_profile_reported(self):
        # submodular but secretly non-monotone: every singleton has value 1,
        # yet the full set drops back to 0, so no proper subset lowers it
        vals = {frozenset(): 0, frozenset({0}): 1, frozenset({1}): 1, frozenset({0, 1}): 0}
        f = SetFunctionOracle((0, 1), SUBMODULAR, True, True, lambda s: vals[s])
        with pytest.raises(DegenerateDecompositionError):
            decompose_submodular_deletion(f)

    def test_size_cap(self):
        with pytest.raises(GroundSetTooLargeError):
            decompose_submodular_deletion(graphic_rank_fn(big_path_graph(22)))


class TestDensityVector:
    def test_three_tier_values(self):
        b = density_vector(edge_count_fn(three_tier()))
        assert b.values == (Fraction(3, 2),) * 4 + (Fraction(4, 3),) * 3 + (Fraction(1),)

    def test_star_uniform(self):
        b = density_vector(edge_count_fn(star()))
        assert b.values == (Fraction(3, 4),) * 4

    def test_k4_rank_uniform(self):
        b = density_vector(graphic_rank_fn(k4()))
        assert b.values == (Fraction(1, 2),) * 6

    def test_pendant_rank_loads(self):
        b = density_vector(graphic_rank_fn(tri_pendant()))
        assert b.values == (Fraction(2, 3),) * 3 + (Fraction(1),)

    def test_is_always_a_base(self):
        for name, g in canonical_graphs():
            fe = edge_count_fn(g)
            assert verify_base(fe, density_vector(fe)), name
            if g.m >= 1:
                fr = graphic_rank_fn(g)
                assert verify_base(fr, density_vector(fr)), name

    def test_deletion_values_telescope(self):
        for g in (p3(), triangle(), tri_pendant(), k4()):
            f = graphic_rank_fn(g)
            assert sum(density_vector(f).values) == f.value(f.ground)


class TestCertificate:
    def test_density_vectors_certify(self):
        for g in (single_edge(), p3(), triangle(), star(), k4(), tri_pendant()):
            fe = edge_count_fn(g)
            assert certify_lex_optimal(fe, density_vector(fe))
            if 1 <= g.m <= 7:
                fr = graphic_rank_fn(g)
                assert certify_lex_optimal(fr, density_vector(fr))

    def test_vertex_is_not_optimal(self):
        f = edge_count_fn(triangle())
        assert not certify_lex_optimal(f, (2, 1, 0))

    def test_uniform_point_of_symmetric_instance(self):
        assert certify_lex_optimal(edge_count_fn(triangle()), (1, 1, 1))

    def test_size_cap(self):
        with pytest.raises(GroundSetTooLargeError):
            certify_lex_optimal(edge_count_fn(three_tier()), (1,) * 8)

    def test_sorted_vector_is_lexicographically_extreme(self):
        for g in (single_edge(), p3(), triangle(), star(), tri_pendant(), k4()):
            for f in (edge_count_fn(g),) + (
                (graphic_rank_fn(g),) if 1 <= g.m <= 7 else ()
            ):
                b = sorted(density_vector(f).values)
                for v in enumerate_base_vertices(f):
                    asc = sorted(v.values)
                    assert b >= asc  # largest possible smallest coordinates
                    assert list(reversed(b)) <= list(reversed(asc))


class TestEquivalence:
    def test_pendant_graph(self):
        assert verify_decomposition_equivalence(graphic_rank_fn(tri_pendant()))

    def test_trees_are_single_blocks(self):
        for g in (p3(), star()):
            f = graphic_rank_fn(g)
            assert verify_decomposition_equivalence(f)
            dele = decompose_submodular_deletion(f)
            cont = decompose_supermodular(dualize(f))
            assert dele.densities == (Fraction(1),)
            assert cont.densities == (Fraction(1),)

    def test_random_graphs(self):
        rng = random.Random(73)
        for _ in range(15):
            g = random_multigraph(rng, n_max=6, m_max=8)
            assert verify_decomposition_equivalence(graphic_rank_fn(g))


class TestUniquenessStructure:
    @staticmethod
    def density_maximizers(f):
        subs = {}
        for r in range(1, len(f.ground) + 1):
            for c in combinations(f.ground, r):
                subs[frozenset(c)] = Fraction(f.value(c), r)
        best = max(subs.values())
        return {s for s, d in subs.items() if d == best}

    @staticmethod
    def ratio_minimizers(f):
        full = frozenset(f.ground)
        f_full = f.value(full)
        ratios = {}
        for r in range(len(f.ground)):
            for c in combinations(f.ground, r):
                s = frozenset(c)
                fs = f.value(s)
                if fs < f_full:
                    ratios[s] = Fraction(len(full) - r, f_full - fs)
        best = min(ratios.values())
        return {s for s, d in ratios.items() if d == best}

    def test_maximizers_union_closed_with_unique_top(self):
        for name, g in canonical_graphs():
            sets = self.density_maximizers(edge_count_fn(g))
            for a, b in combinations(sets, 2):
                assert a | b in sets, name
            maximal = [s for s in sets if not any(s < t for t in sets)]
            assert len(maximal) == 1, name

    def test_minimizers_intersection_closed_with_unique_bottom(self):
        for name, g in canonical_graphs():
            if g.m == 0:
                continue
            sets = self.ratio_minimizers(graphic_rank_fn(g))
            for a, b in combinations(sets, 2):
                assert a & b in sets, name
            minimal = [s for s in sets if not any(t < s for t in sets)]
            assert len(minimal) == 1, name


class TestDecompositionType:
    def test_validation(self):
        with pytest.raises(ValueError):
            DenseDecomposition("other", ((0,),), (Fraction(1),))
        with pytest.raises(ValueError):
            DenseDecomposition(CONTRACTION, ((0,),), ())

    def test_element_block(self):
        dec = decompose_supermodular(edge_count_fn(three_tier()))
        assert dec.element_block(0) == 0
        assert dec.element_block(5) == 1
        assert dec.element_block(7) == 2
        with pytest.raises(KeyError):
            dec.element_block(9)

    def test_json_shape(self):
        dec = decompose_submodular_deletion(graphic_rank_fn(tri_pendant()))
        assert dec.to_json_dict() == {
            "variant": DELETION,
            "blocks": [
                {"elements": [3], "density": "1"},
                {"elements": [0, 1, 2], "density": "3/2"},
            ],
        }
