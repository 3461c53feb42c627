import pytest

from robonet.digraph import new_digraph
from robonet.errors import InstanceTooLargeError, UnsatisfiableError
from robonet.oracle import (
    OracleBudget,
    oracle_ac,
    oracle_jc,
    oracle_joint_rs,
    oracle_lc,
    oracle_region,
    random_digraph,
)


class TestOracleDegrees:
    def test_path(self, path3):
        assert (oracle_lc(path3), oracle_ac(path3), oracle_jc(path3)) == (1, 1, 1)

    def test_g4(self, g4):
        assert (oracle_lc(g4), oracle_ac(g4), oracle_jc(g4)) == (3, 2, 2)

    def test_complete4(self, complete4):
        assert (oracle_lc(complete4), oracle_ac(complete4), oracle_jc(complete4)) == (3, 3, 3)

    def test_uncontrollable(self):
        g = new_digraph(3, [1], [(1, 2)])
        assert (oracle_lc(g), oracle_ac(g), oracle_jc(g)) == (0, 0, 0)

    def test_star_cap(self, star4):
        assert oracle_ac(star4) == 3

    def test_min_identity(self, g4, star4, path3):
        for g in (g4, star4, path3):
            assert oracle_jc(g) == min(oracle_lc(g), oracle_ac(g))


class TestOracleRegion:
    def test_g4_pairs(self, g4):
        assert oracle_joint_rs(g4, 2, 1)
        assert oracle_joint_rs(g4, 3, 0)
        assert not oracle_joint_rs(g4, 1, 2)

    def test_double_loop_region_is_the_triangle(self, double_loop5):
        expected = tuple(sorted((r, s) for r in range(3) for s in range(3) if r + s <= 2))
        assert oracle_region(double_loop5) == expected

    def test_anchor_pair(self, path3):
        assert oracle_joint_rs(path3, 0, 0)
        assert not oracle_joint_rs(new_digraph(3, [1], [(1, 2)]), 0, 0)


class TestBudget:
    def test_vertex_cap(self):
        g = new_digraph(11, [1], [(1, v) for v in range(2, 12)])
        with pytest.raises(InstanceTooLargeError):
            oracle_lc(g)

    def test_edge_cap(self, g4):
        with pytest.raises(InstanceTooLargeError):
            oracle_lc(g4, OracleBudget(max_edges=10))

    def test_candidate_cap(self, g4):
        with pytest.raises(InstanceTooLargeError):
            oracle_jc(g4, OracleBudget(max_subset_candidates=10))


class TestRandomDigraph:
    def test_deterministic_across_calls(self):
        assert random_digraph(4, 4, 1, 42) == random_digraph(4, 4, 1, 42)

    def test_frozen_sample(self):
        assert random_digraph(4, 4, 1, 42).sorted_edges == ((1, 2), (1, 3), (3, 2), (4, 2))

    def test_distinct_seeds_differ(self):
        assert random_digraph(5, 6, 1, 1) != random_digraph(5, 6, 1, 2)

    def test_unsatisfiable_edge_count(self):
        with pytest.raises(UnsatisfiableError):
            random_digraph(3, 7, 1, 0)  # only (3-1)*(3-1) = 4 placements exist

    def test_unsatisfiable_root_count(self):
        with pytest.raises(UnsatisfiableError):
            random_digraph(3, 1, 0, 0)
        with pytest.raises(UnsatisfiableError):
            random_digraph(3, 1, 4, 0)

    def test_all_roots_no_edges_is_fine(self):
        g = random_digraph(3, 0, 3, 7)
        assert g.followers == ()

    def test_thousand_seeds_validate(self):
        for seed in range(1000):
            g = random_digraph(5, 2 + seed % 10, 1 + seed % 2, seed)
            assert g.n == 5
            assert all(e[1] not in g.root_set for e in g.edges)