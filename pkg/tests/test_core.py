import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wtmov.core import (
    ParseError,
    ReversalError,
    ReversalFunction,
    TournamentError,
    WeightedTournament,
    apply_reversal,
    format_tournament,
    is_condorcet_loser,
    is_condorcet_winner,
    margin,
    margin_graph,
    parse_tournament,
    permute,
    remove_alternative,
    reversal_size,
)

from .conftest import tournaments


def test_example_weights(t_ex):
    assert t_ex.m == 4 and t_ex.n == 10
    assert t_ex.w.tolist() == [[0, 9, 8, 4], [1, 0, 8, 3], [2, 2, 0, 7], [6, 7, 3, 0]]
    assert margin(t_ex, 0, 1) == 8
    assert margin(t_ex, 3, 0) == 2


def test_margin_graph_of_example(t_ex):
    g = margin_graph(t_ex)
    assert g.edges == {(0, 1): 8, (0, 2): 6, (1, 2): 6, (2, 3): 4, (3, 0): 2, (3, 1): 4}


def test_rejects_bad_matrices():
    with pytest.raises(TournamentError):
        WeightedTournament(np.array([[0, 2], [1, 0]]), 2)
    with pytest.raises(TournamentError):
        WeightedTournament(np.array([[1, 1], [1, 0]]), 2)
    with pytest.raises(TournamentError):
        WeightedTournament(np.array([[0, 3], [-1, 0]]), 2)
    with pytest.raises(TournamentError):
        WeightedTournament(np.zeros((2, 3), dtype=int), 2)


def test_tournament_is_immutable(t_ex):
    with pytest.raises(ValueError):
        t_ex.w[0, 1] = 3


def test_reversal_validation():
    with pytest.raises(ReversalError):
        ReversalFunction(np.array([[0, 1], [0, 0]]))
    R = ReversalFunction.from_entries(3, {(0, 1): 2, (2, 1): 1})
    assert R.size == 3
    assert R.entries() == [(0, 1, 2), (2, 1, 1)]


def test_reversal_capacity(t_ex):
    with pytest.raises(ReversalError):
        apply_reversal(t_ex, ReversalFunction.from_entries(4, {(0, 1): 2}))
    T2 = apply_reversal(t_ex, ReversalFunction.from_entries(4, {(0, 1): 1}))
    assert T2.w[0, 1] == 10 and T2.w[1, 0] == 0


def test_remove_alternative_shifts_labels(t_ex):
    T2 = remove_alternative(t_ex, 1)
    assert T2.names() == ("a", "c", "d")
    assert T2.w.tolist() == [[0, 8, 4], [2, 0, 7], [6, 3, 0]]


def test_condorcet_predicates():
    T = WeightedTournament.from_upper(3, 3, {(0, 1): 2, (0, 2): 3, (1, 2): 2})
    assert is_condorcet_winner(T, 0) and is_condorcet_loser(T, 2)
    assert not is_condorcet_winner(T, 1)


def test_parse_roundtrip_with_labels(t_ex):
    text = format_tournament(t_ex, ["example"])
    assert text.startswith("# example\n4 10\n")
    assert parse_tournament(text) == t_ex


@pytest.mark.parametrize("text, line", [
    ("2 2\n0 1\n", None),
    ("2 2\n0 x\n1 0\n", 2),
    ("2 2\n0 1 1\n1 0\n", 2),
    ("2\n", 1),
    ("", None),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as e:
        parse_tournament(text)
    assert e.value.line == line


def test_parse_rejects_inconsistent_weights():
    with pytest.raises(ParseError):
        parse_tournament("2 3\n0 1\n1 0\n")


@given(tournaments())
def test_complement_invariant(T):
    off = ~np.eye(T.m, dtype=bool)
    assert np.all((T.w + T.w.T)[off] == T.n)
    assert np.all(np.diag(T.w) == 0)


@given(tournaments())
def test_margin_parity(T):
    off = ~np.eye(T.m, dtype=bool)
    assert np.all((T.margins[off] - T.n) % 2 == 0)


@given(tournaments(), st.data())
def test_reversal_inverse_and_size(T, data):
    k = T.m * (T.m - 1) // 2
    iu, ju = np.triu_indices(T.m, 1)
    lo = -T.w[iu, ju]
    hi = T.w[ju, iu]
    deltas = [data.draw(st.integers(int(a), int(b))) for a, b in zip(lo, hi)]
    r = np.zeros((T.m, T.m), dtype=np.int64)
    r[iu, ju] = deltas[:k]
    r -= r.T
    R = ReversalFunction(r)
    assert reversal_size(R) == reversal_size(-R)
    assert apply_reversal(apply_reversal(T, R), -R) == T


@settings(max_examples=50)
@given(tournaments(), st.randoms())
def test_permute_preserves_margins_multiset(T, rnd):
    perm = list(range(T.m))
    rnd.shuffle(perm)
    T2 = permute(T, perm)
    for i in range(T.m):
        for j in range(T.m):
            assert T2.w[i, j] == T.w[perm[i], perm[j]]


@given(tournaments())
def test_format_roundtrip(T):
    assert parse_tournament(format_tournament(T)) == T
