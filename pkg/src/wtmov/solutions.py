"""Borda, Split Cycle and the weighted Uncovered Set.

Each solution maps a tournament to a non-empty frozenset of winners.  Split
Cycle and wUC also come with a second, slower characterization that the test
suite uses as a cross-check.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .core import WeightedTournament

WinningSet = frozenset

SOLUTION_NAMES = ("BO", "SC", "wUC")

MAX_ENUMERATION_M = 8


def borda_scores(T: WeightedTournament) -> np.ndarray:
    """Weighted outdegree of every alternative."""
    return T.w.sum(axis=1)


def borda_winners(T: WeightedTournament) -> WinningSet:
    s = borda_scores(T)
    return frozenset(int(i) for i in np.flatnonzero(s == s.max()))


def strongest_path_matrix(T: WeightedTournament) -> np.ndarray:
    """Widest-path closure of the margin graph (0 where no path exists)."""
    p = np.maximum(T.margins, 0)
    for k in range(T.m):
        p = np.maximum(p, np.minimum(p[:, k, None], p[None, k, :]))
    np.fill_diagonal(p, 0)
    return p


def split_cycle_winners(T: WeightedTournament) -> WinningSet:
    # y defeats x iff margin(y, x) > 0 and it beats every x->y path strength
    mg = T.margins
    p = strongest_path_matrix(T)
    defeated = ((mg.T > 0) & (mg.T > p)).any(axis=1)
    return frozenset(int(i) for i in np.flatnonzero(~defeated))


def simple_cycles(edges: dict[tuple[int, int], int], m: int):
    """Yield each simple directed cycle once, rooted at its smallest vertex."""
    succ = [[] for _ in range(m)]
    for x, y in sorted(edges):
        succ[x].append(y)
    for start in range(m):
        stack = [(start, iter(succ[start]))]
        path = [start]
        on_path = {start}
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
            elif nxt == start:
                yield list(path)
            elif nxt > start and nxt not in on_path:
                path.append(nxt)
                on_path.add(nxt)
                stack.append((nxt, iter(succ[nxt])))


def splitting_edges(T: WeightedTournament) -> set[tuple[int, int]]:
    """Union over all cycles of the cycle's minimum-margin edges."""
    if T.m > MAX_ENUMERATION_M:
        raise ValueError(f"cycle enumeration limited to m <= {MAX_ENUMERATION_M}")
    mg = T.margins
    edges = {(int(x), int(y)): int(mg[x, y]) for x, y in np.argwhere(mg > 0)}
    deleted = set()
    for cyc in simple_cycles(edges, T.m):
        cyc_edges = list(zip(cyc, cyc[1:] + cyc[:1]))
        low = min(edges[e] for e in cyc_edges)
        deleted.update(e for e in cyc_edges if edges[e] == low)
    return deleted


def split_cycle_winners_by_cycle_enumeration(T: WeightedTournament) -> WinningSet:
    mg = T.margins
    deleted = splitting_edges(T)
    dominated = {int(y) for x, y in np.argwhere(mg > 0) if (int(x), int(y)) not in deleted}
    return frozenset(i for i in range(T.m) if i not in dominated)


def w_covers(T: WeightedTournament, y: int, x: int) -> bool:
    """True iff ``y`` beats ``x`` and does at least as well against everyone else."""
    if x == y:
        raise ValueError("an alternative cannot cover itself")
    if T.w[y, x] <= T.w[x, y]:
        return False
    others = [z for z in range(T.m) if z != x and z != y]
    return bool(np.all(T.w[y, others] >= T.w[x, others]))


def covering_matrix(T: WeightedTournament) -> np.ndarray:
    """``C[y, x]`` is True iff y w-covers x."""
    w = T.w
    # ge[y, x, z] = w[y, z] >= w[x, z]; entries z in {x, y} are masked out
    ge = w[:, None, :] >= w[None, :, :]
    m = T.m
    idx = np.arange(m)
    ge[idx, :, idx] = True
    ge[:, idx, idx] = True
    return (w > w.T) & ge.all(axis=2)


def wuc_winners(T: WeightedTournament) -> WinningSet:
    covered = covering_matrix(T).any(axis=0)
    return frozenset(int(i) for i in np.flatnonzero(~covered))


def decreasing_path_exists(T: WeightedTournament, x: int, y: int, k: int) -> bool:
    """Whether a decreasing path of length at most ``k`` leads from x to y.

    A path ``x = v1, ..., vj, y`` of length ``j`` qualifies when the smallest
    weight along ``v1 .. vj`` exceeds ``w[y][vj]``; length 1 means
    ``margin(x, y) >= 0``.
    """
    if x == y:
        raise ValueError("x and y must differ")
    if k < 1:
        raise ValueError("k must be at least 1")
    w = T.w
    if w[x, y] >= w[y, x]:
        return True
    if k == 1:
        return False
    others = [z for z in range(T.m) if z != x and z != y]
    if k == 2:
        return bool(np.any(w[x, others] > w[y, others]))
    # widest path from x avoiding y, at most j-1 edges, for j = 2..k
    best = np.full(T.m, -1, dtype=np.int64)
    best[x] = T.n + 1
    for _ in range(k - 1):
        nxt = best.copy()
        for u in range(T.m):
            if best[u] < 0 or u == y:
                continue
            for v in others:
                if v != u:
                    nxt[v] = max(nxt[v], min(best[u], w[u, v]))
        best = nxt
        if any(best[v] > w[y, v] for v in others):
            return True
    return False


def wuc_winners_by_decreasing_paths(T: WeightedTournament) -> WinningSet:
    return frozenset(x for x in range(T.m)
                     if all(decreasing_path_exists(T, x, y, 2) for y in range(T.m) if y != x))


WINNER_FUNCTIONS: dict[str, Callable[[WeightedTournament], WinningSet]] = {
    "BO": borda_winners,
    "SC": split_cycle_winners,
    "wUC": wuc_winners,
}


def winners(T: WeightedTournament, solution: str) -> WinningSet:
    try:
        return WINNER_FUNCTIONS[solution](T)
    except KeyError:
        raise ValueError(f"unknown solution {solution!r}; choose from {SOLUTION_NAMES}") from None
