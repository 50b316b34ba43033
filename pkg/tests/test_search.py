import pytest

from wienerblocks.blocks import block_count
from wienerblocks.canon import canonical_graph6, is_isomorphic
from wienerblocks.enumeration import enumerate_connected
from wienerblocks.families import FamilyParams, cycle, path, spider, theta, two_cycles_path
from wienerblocks.graph import GraphError, distance_matrix, graph6_decode, wiener
from wienerblocks.search import (
    even_thetas,
    far_subsets,
    family_optimum,
    max_min_distance,
    max_triple_distance,
    max_wiener_blocks,
    minimal_biconnected_spanning,
    survey_hill_climb,
    two_cycle_wiener,
    verify_kdist,
    verify_main,
    verify_theta,
    verify_two_cycle_family,
)


def test_small_search_result():
    res = max_wiener_blocks(4, 2)
    assert res.to_dict() == {
        "n": 4, "p": 2, "max_w": 8, "extremal": ["CN"], "family_match": True, "witness_params": [[2, 3]]
    }


@pytest.mark.parametrize("n", range(3, 9))
def test_single_block_maximum_is_the_cycle(n):
    res = max_wiener_blocks(n, 1)
    assert res.extremal == [canonical_graph6(cycle(n))]
    assert res.max_w == wiener(cycle(n))


@pytest.mark.parametrize("n", range(3, 9))
def test_tree_maximum_is_the_path(n):
    res = max_wiener_blocks(n, n - 1)
    assert res.extremal == [canonical_graph6(path(n))]
    assert res.family_match


@pytest.mark.parametrize("n", range(2, 9))
def test_block_counts_partition_the_classes(n):
    per_p = {}
    for g in enumerate_connected(n):
        p = block_count(g)
        per_p[p] = per_p.get(p, 0) + 1
    assert sum(per_p.values()) == len(list(enumerate_connected(n)))
    assert set(per_p) <= set(range(1, n))


def test_search_range():
    with pytest.raises(GraphError):
        max_wiener_blocks(5, 5)
    with pytest.raises(GraphError):
        family_optimum(5, 1)


def test_family_optimum_known_values():
    opt = family_optimum(8, 2)
    assert opt.best_pairs == [(2, 7)] and opt.best_w == 61
    assert family_optimum(8, 3).best_pairs == [(2, 6), (4, 4)]


def test_family_optimum_matches_materialized_graphs():
    for n in range(4, 12):
        for p in range(2, n):
            opt = family_optimum(n, p)
            for a, b in opt.best_pairs:
                assert wiener(two_cycles_path(FamilyParams(a, b, p))) == opt.best_w


def test_verify_main_small():
    rep = verify_main(6)
    assert rep.passed
    assert [c.p for c in rep.cases] == [2, 3, 4, 5]
    for case in rep.cases:
        assert case.outside_family == []
        assert set(case.terminal_block_counts) == {2}


def test_two_cycle_values():
    assert {r: two_cycle_wiener(7, r) for r in range(2, 7)} == {2: 42, 3: 38, 4: 40, 5: 38, 6: 42}
    assert verify_two_cycle_family(9).passed
    assert two_cycle_wiener(9, 4) == 82 > two_cycle_wiener(9, 3) == 81 > two_cycle_wiener(9, 5) == 78


def test_far_subsets_on_spider():
    g = spider(3, 2)
    dist = distance_matrix(g)
    assert far_subsets(dist, 3, 4) == [(2, 4, 6)]
    assert max_min_distance(dist, 3) == 4


def test_verify_kdist_small():
    rep = verify_kdist(7, 3)
    assert rep.passed and rep.bound == 4 and rep.worst == 4
    # one equality case: the spider, at its three tips (in enumeration labels)
    assert len(rep.equality_cases) == 1
    g6, subset = rep.equality_cases[0]
    assert g6 == canonical_graph6(spider(3, 2)) and len(subset) == 3


def test_theta_examples():
    assert max_triple_distance(theta(2, 2, 4)) == 8
    assert max_triple_distance(cycle(5)) == 5
    assert sorted(even_thetas(7).values()) == [(2, 2, 4)]


def test_verify_theta_even_n_is_strict():
    for n in (4, 6):
        rep = verify_theta(n)
        assert rep.max_d < n + 1 and rep.witnesses == [] and rep.passed


def test_theta_witnesses_contain_even_theta():
    # K_{1,1,3} reaches the bound without being a theta graph
    rep = verify_theta(5)
    assert rep.max_d == 6
    assert "DF{" in rep.witnesses
    assert rep.spanning_theta_violations == []
    core = minimal_biconnected_spanning(graph6_decode("DF{"))
    assert is_isomorphic(core, theta(2, 2, 2))


def test_climb_survey_small():
    rep = survey_hill_climb(6)
    assert rep.passed and rep.graphs == 112
    for _, _, w, best in rep.non_global:
        assert w < best
