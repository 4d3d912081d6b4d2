import itertools

import numpy as np
import pytest
from hypothesis import given

from wtmov.core import (
    ReversalFunction,
    WeightedTournament,
    apply_reversal,
    is_condorcet_winner,
    margin_graph,
    permute,
)
from wtmov.solutions import (
    borda_scores,
    borda_winners,
    covering_matrix,
    decreasing_path_exists,
    simple_cycles,
    split_cycle_winners,
    split_cycle_winners_by_cycle_enumeration,
    splitting_edges,
    strongest_path_matrix,
    w_covers,
    wuc_winners,
    wuc_winners_by_decreasing_paths,
)

from .conftest import tournaments


def test_example_winners(t_ex):
    assert borda_scores(t_ex).tolist() == [21, 12, 11, 16]
    assert borda_winners(t_ex) == {0}
    assert split_cycle_winners(t_ex) == {0, 3}
    assert wuc_winners(t_ex) == {0, 2, 3}


def test_example_splitting_edges(t_ex):
    assert splitting_edges(t_ex) == {(2, 3), (3, 1), (3, 0)}
    assert split_cycle_winners_by_cycle_enumeration(t_ex) == {0, 3}


def test_example_strongest_path(t_ex):
    P = strongest_path_matrix(t_ex)
    assert P[0, 3] == 4
    # widest path by brute force over all simple paths
    g = margin_graph(t_ex).edges
    best = 0
    for k in range(0, 3):
        for mid in itertools.permutations([1, 2], k):
            path = [0, *mid, 3]
            legs = list(zip(path, path[1:]))
            if all(e in g for e in legs):
                best = max(best, min(g[e] for e in legs))
    assert best == 4


def test_borda_after_table_witness(t_ex):
    T2 = apply_reversal(t_ex, ReversalFunction.from_entries(4, {(3, 0): 3}))
    assert 0 not in borda_winners(T2)


def test_all_tied():
    T = WeightedTournament(np.full((4, 4), 3) - 3 * np.eye(4, dtype=int), 6)
    assert borda_scores(T).tolist() == [9] * 4
    assert borda_winners(T) == {0, 1, 2, 3}
    assert split_cycle_winners(T) == {0, 1, 2, 3}


def test_single_edge_strongest_path():
    T = WeightedTournament.from_upper(2, 5, {(0, 1): 4})
    P = strongest_path_matrix(T)
    assert P[0, 1] == 3 and P[1, 0] == 0


def test_example_covering(t_ex):
    assert w_covers(t_ex, 0, 1)
    assert not w_covers(t_ex, 1, 0)
    with pytest.raises(ValueError):
        w_covers(t_ex, 1, 1)
    assert decreasing_path_exists(t_ex, 2, 0, 2)
    assert not decreasing_path_exists(t_ex, 2, 0, 1)


def test_tied_pair_has_length_one_path():
    T = WeightedTournament.from_upper(2, 4, {(0, 1): 2})
    assert decreasing_path_exists(T, 0, 1, 1) and decreasing_path_exists(T, 1, 0, 1)


def test_acyclic_has_no_splitting_edges():
    T = WeightedTournament.from_upper(3, 3, {(0, 1): 2, (0, 2): 3, (1, 2): 2})
    assert splitting_edges(T) == set()
    assert split_cycle_winners_by_cycle_enumeration(T) == {0}


def test_cycle_enumeration_guard():
    T = WeightedTournament(np.full((9, 9), 1) - np.eye(9, dtype=int), 2)
    with pytest.raises(ValueError):
        split_cycle_winners_by_cycle_enumeration(T)


def test_simple_cycles_triangle():
    cycles = list(simple_cycles({(0, 1): 1, (1, 2): 1, (2, 0): 1}, 3))
    assert len(cycles) == 1 and sorted(cycles[0]) == [0, 1, 2]


def test_unit_weight_is_unweighted_uncovered_set():
    # 3-cycle plus a dominated vertex: classic uncovered set is the cycle
    T = WeightedTournament.from_upper(4, 1, {(0, 1): 1, (1, 2): 1, (2, 0): 1,
                                            (0, 3): 1, (1, 3): 1, (2, 3): 1})
    assert wuc_winners(T) == {0, 1, 2}


@given(tournaments(max_m=6))
def test_split_cycle_definitions_agree(T):
    assert split_cycle_winners(T) == split_cycle_winners_by_cycle_enumeration(T)


@given(tournaments(max_m=6))
def test_wuc_characterizations_agree(T):
    assert wuc_winners(T) == wuc_winners_by_decreasing_paths(T)


@given(tournaments(max_m=6))
def test_containment_and_nonempty(T):
    bo, sc, wuc = borda_winners(T), split_cycle_winners(T), wuc_winners(T)
    assert bo and sc and wuc
    assert bo <= wuc


@given(tournaments(max_m=6))
def test_condorcet_winner(T):
    for x in range(T.m):
        if is_condorcet_winner(T, x):
            assert split_cycle_winners(T) == {x}
            assert x in wuc_winners(T)


@given(tournaments(max_m=6))
def test_strongest_path_closure(T):
    P = strongest_path_matrix(T)
    assert np.all(P >= 0)
    off = ~np.eye(T.m, dtype=bool)
    for z in range(T.m):
        via = np.minimum(P[:, z:z + 1], P[z:z + 1, :])
        assert np.all(P[off] >= via[off])


@given(tournaments(max_m=5))
def test_covering_asymmetric(T):
    C = covering_matrix(T)
    assert not np.any(C & C.T)


@given(tournaments(max_m=5))
def test_strongest_path_relabel(T):
    perm = list(range(T.m))[::-1]
    P = strongest_path_matrix(T)
    P2 = strongest_path_matrix(permute(T, perm))
    assert np.array_equal(P2, P[np.ix_(perm, perm)])


@given(tournaments(max_m=5))
def test_wuc_reach_lemma(T):
    W = wuc_winners(T)
    for x in range(T.m):
        reach = all(decreasing_path_exists(T, x, y, 2) for y in range(T.m) if y != x)
        assert reach == (x in W)
