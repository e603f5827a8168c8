"""Spanning tree packing, graph strength, and ideal-load cross-checks."""

import random
from fractions import Fraction

import pytest

from conftest import (
    canonical_graphs,
    k4,
    p3,
    random_connected_graph,
    single_edge,
    star,
    three_tier,
    tri_pendant,
    triangle,
)
from densefw import (
    AVERAGING,
    STANDARD,
    MultiGraph,
    deletion_blocks,
    frank_wolfe,
    fw_tree_pack,
    graphic_rank_fn,
    greedy_tree_pack,
    harmonic_bound,
    ideal_loads,
    tnw_ideal_loads,
    tnw_strength,
    verify_base,
)
from densefw.errors import DisconnectedGraphError, GroundSetTooLargeError
from densefw.treepack import _mst_lmo


def cycle(n):
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def two_islands():
    return MultiGraph(4, ((0, 1), (2, 3)))


class TestIdealLoads:
    def test_triangle(self):
        assert ideal_loads(triangle()).values == (Fraction(2, 3),) * 3

    def test_pendant_graph(self):
        assert ideal_loads(tri_pendant()).values == (
            Fraction(2, 3), Fraction(2, 3), Fraction(2, 3), Fraction(1))

    def test_k4(self):
        assert ideal_loads(k4()).values == (Fraction(1, 2),) * 6

    def test_three_tier_layers(self):
        assert ideal_loads(three_tier()).values == (
            (Fraction(1, 2),) * 6 + (Fraction(2, 3),) * 3 + (Fraction(1), Fraction(1)))

    def test_trees_carry_unit_loads(self):
        assert ideal_loads(p3()).values == (Fraction(1), Fraction(1))
        assert ideal_loads(star()).values == (Fraction(1),) * 3

    def test_sums_to_spanning_tree_size(self):
        rng = random.Random(41)
        graphs = [g for _, g in canonical_graphs()]
        graphs += [random_connected_graph(rng) for _ in range(10)]
        for g in graphs:
            loads = ideal_loads(g)
            assert sum(loads.values) == g.n - 1
            assert verify_base(graphic_rank_fn(g), loads)

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            ideal_loads(two_islands())

    def test_size_cap(self):
        with pytest.raises(GroundSetTooLargeError):
            ideal_loads(cycle(21))


class TestStrength:
    def test_frozen_values(self):
        assert tnw_strength(triangle()) == Fraction(3, 2)
        assert tnw_strength(tri_pendant()) == Fraction(1)
        assert tnw_strength(p3()) == Fraction(1)
        assert tnw_strength(star()) == Fraction(1)
        assert tnw_strength(k4()) == Fraction(2)
        assert tnw_strength(single_edge()) == Fraction(1)

    def test_first_deletion_ratio_is_strength(self):
        for name, g in canonical_graphs():
            assert deletion_blocks(g).densities[0] == tnw_strength(g), name

    def test_max_load_is_reciprocal_strength(self):
        for name, g in canonical_graphs():
            assert max(ideal_loads(g).values) == 1 / tnw_strength(g), name

    def test_errors(self):
        with pytest.raises(DisconnectedGraphError):
            tnw_strength(two_islands())
        with pytest.raises(ValueError):
            tnw_strength(MultiGraph(1, ()))
        with pytest.raises(GroundSetTooLargeError):
            tnw_strength(cycle(11))


class TestPartitionOracle:
    def test_matches_rank_decomposition_on_named_instances(self):
        for name, g in canonical_graphs():
            assert tnw_ideal_loads(g).values == ideal_loads(g).values, name

    def test_matches_on_random_connected_graphs(self):
        rng = random.Random(43)
        for _ in range(12):
            g = random_connected_graph(rng)
            assert tnw_ideal_loads(g).values == ideal_loads(g).values

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            tnw_ideal_loads(two_islands())


class TestGreedyPacking:
    def test_tree_instances_are_immediate_fixed_points(self):
        for g in (p3(), star()):
            loads, trace = greedy_tree_pack(g, 4, exact=True)
            assert loads.values == (Fraction(1),) * g.m
            assert all(r.objective == float(g.n - 1) for r in trace.records)

    def test_triangle_rotates_to_exact_answer_in_three_trees(self):
        loads, _ = greedy_tree_pack(triangle(), 3, exact=True)
        assert loads.values == (Fraction(2, 3),) * 3

    def test_triangle_long_run_near_ideal(self):
        ref = ideal_loads(triangle())
        loads, trace = greedy_tree_pack(triangle(), 10_000, ref=ref)
        assert trace.records[-1].dist_ref <= 0.02
        assert loads.distance(ref) <= 0.02

    def test_pendant_bridge_saturates_every_iterate(self):
        g = tri_pendant()
        _, trace = frank_wolfe(
            _mst_lmo(g), ground=range(g.m), schedule=AVERAGING,
            iterations=60, keep_iterates=True,
        )
        for rec in trace.records:
            assert rec.iterate[3] == 1.0

    def test_iterates_stay_in_the_polytope_box(self):
        g = k4()
        _, trace = frank_wolfe(
            _mst_lmo(g), ground=range(g.m), schedule=AVERAGING,
            iterations=50, keep_iterates=True,
        )
        for rec in trace.records:
            assert abs(sum(rec.iterate) - (g.n - 1)) < 1e-9
            assert all(-1e-12 <= v <= 1 + 1e-12 for v in rec.iterate)

    def test_greedy_is_averaging_frank_wolfe(self):
        for g in (triangle(), tri_pendant(), k4()):
            ref = ideal_loads(g)
            l1, t1 = greedy_tree_pack(g, 200, ref=ref)
            l2, t2 = fw_tree_pack(g, 200, schedule=AVERAGING, ref=ref)
            assert l1.values == l2.values
            assert len(t1.records) == len(t2.records)
            for a, b in zip(t1.records, t2.records):
                assert (a.k, a.objective, a.gamma, a.dist_ref) == (
                    b.k, b.objective, b.gamma, b.dist_ref)

    def test_standard_schedule_hits_tolerance_within_budget(self):
        eps = 0.02
        for g in (triangle(), tri_pendant()):
            budget = int(4 * g.m / eps**2)
            ref = ideal_loads(g)
            _, trace = fw_tree_pack(
                g, budget, schedule=STANDARD, ref=ref, stop_dist=eps)
            assert trace.records[-1].dist_ref <= eps
            assert trace.records[-1].k <= budget

    def test_averaging_objective_gap_under_harmonic_bound(self):
        for g in (triangle(), tri_pendant(), k4()):
            opt = float(sum(v * v for v in ideal_loads(g).values))
            cap = 2 * g.m  # each load coordinate moves within [0, 1]
            _, trace = greedy_tree_pack(g, 2000)
            for rec in trace.records:
                bound = float(harmonic_bound(rec.k, cap, 0))
                assert rec.objective - opt <= bound + 1e-9

    def test_disconnected_rejected(self):
        with pytest.raises(DisconnectedGraphError):
            greedy_tree_pack(two_islands(), 5)
