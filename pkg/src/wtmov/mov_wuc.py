"""Margin of victory for the weighted Uncovered Set.

A winner ``a`` is removed once some ``d`` covers it, i.e. once every
decreasing path of length at most two from ``a`` to ``d`` is broken.  Those
paths share no edges besides their endpoints, so the cheapest way to let a
fixed ``d`` cover ``a`` breaks each one independently:

* the direct edge needs ``w[d][a] >= floor(n/2) + 1``;
* the path through ``x`` needs ``w[d][x] >= w[a][x]``.

Both are fixed by moving weight towards ``d``.
"""

from __future__ import annotations

import numpy as np

from . import exact
from .core import MovResult, ReversalFunction, WeightedTournament, apply_reversal
from .oracle import BudgetExhausted, GuardError, search
from .solutions import w_covers, wuc_winners

ENUM_MAX_M = 5
ENUM_MAX_N = 10


def cover_cost(T: WeightedTournament, a: int, d: int) -> tuple[int, np.ndarray]:
    """Cheapest reversal letting d cover a, and its matrix."""
    w = T.w
    r = np.zeros((T.m, T.m), dtype=np.int64)
    need = max(0, T.n // 2 + 1 - int(w[d, a]))
    r[d, a] += need
    r[a, d] -= need
    for x in range(T.m):
        if x in (a, d):
            continue
        gap = int(w[a, x] - w[d, x])
        if gap > 0:
            r[d, x] += gap
            r[x, d] -= gap
    return int(r[r > 0].sum()), r


def mov_wuc_destructive(T: WeightedTournament, a: int) -> MovResult:
    if a not in wuc_winners(T):
        raise ValueError(f"alternative {a} is not a wUC winner")
    if T.m < 2:
        raise ValueError("a lone alternative cannot lose")
    best = None
    for d in range(T.m):
        if d == a:
            continue
        cost, r = cover_cost(T, a, d)
        if best is None or cost < best[0]:
            best = (cost, d, r)
    cost, d, r = best
    R = ReversalFunction(r)
    T2 = apply_reversal(T, R)
    assert w_covers(T2, d, a), "witness failed"
    return MovResult(cost, R, "wuc-greedy")


def decreasing_paths(T: WeightedTournament, a: int, d: int) -> list[list[tuple[int, int]]]:
    """Edge sets of all decreasing paths of length at most 2 from a to d.

    A path via ``x`` is recorded with the two pairs it depends on:
    ``(a, x)`` and ``(d, x)``.
    """
    paths = []
    if T.w[a, d] >= T.w[d, a]:
        paths.append([(a, d)])
    for x in range(T.m):
        if x not in (a, d) and T.w[a, x] > T.w[d, x]:
            paths.append([(a, x), (d, x)])
    return paths


def mov_wuc_constructive_exact(T: WeightedTournament, d: int, budget: int | None = None,
                               method: str = "auto", override_guard: bool = False) -> MovResult:
    """Exact constructive MoV; methods as in ``mov_sc_constructive_exact``."""
    if d in wuc_winners(T):
        raise ValueError(f"alternative {d} already is a wUC winner")
    from .analysis import mov_bounds
    cap = -mov_bounds("wUC", T.n, T.m)[1]
    limit = cap if budget is None else min(cap, budget)
    if method == "auto":
        method = "enumerate" if T.m <= 4 and T.n <= 10 else "milp"
    if method == "enumerate":
        if not override_guard and (T.m > ENUM_MAX_M or T.n > ENUM_MAX_N):
            raise GuardError(f"exhaustive constructive search limited to m <= {ENUM_MAX_M}, "
                             f"n <= {ENUM_MAX_N}; constructive wUC MoV is NP-hard")
        return search(T, d, "wUC", limit, solver="wuc-enumeration")
    if method == "milp":
        R = exact.constructive_milp(T, d, "wUC", limit)
        if R is None:
            raise BudgetExhausted(f"no constructive reversal of size <= {limit}")
        assert d in wuc_winners(apply_reversal(T, R)), "witness failed"
        return MovResult(-R.size, R, "wuc-milp")
    raise ValueError(f"unknown method {method!r}")


def set_cover_reduction(r: int, sets) -> WeightedTournament:
    """Tournament where x's constructive MoV encodes the set cover instance.

    Alternatives: x = 0, one per set ``a_k = 1 + k``, one per element
    ``b_e = 1 + s + e`` for elements ``e`` in 0..r-1.
    """
    if r < 2:
        raise ValueError("the universe needs at least two elements")
    sets = [frozenset(S) for S in sets]
    for S in sets:
        if not S:
            raise ValueError("subsets must be non-empty")
        if not all(0 <= e < r for e in S):
            raise ValueError(f"element out of range in {sorted(S)}")
    s = len(sets)
    n = 2 * r
    m = 1 + s + r
    w = np.full((m, m), r, dtype=np.int64)
    np.fill_diagonal(w, 0)
    A = [1 + k for k in range(s)]
    B = [1 + s + e for e in range(r)]
    for k, S in enumerate(sets):
        w[0, A[k]], w[A[k], 0] = r + 1, r - 1
        for e in range(r):
            hi = r + 1 if e in S else n
            w[B[e], A[k]], w[A[k], B[e]] = hi, n - hi
    for e in range(r):
        w[B[e], 0], w[0, B[e]] = n, 0
    labels = ["x"] + [f"S{k}" for k in range(s)] + [f"e{e}" for e in range(r)]
    return WeightedTournament(w, n, labels)


def read_set_system(text: str) -> tuple[int, list[list[int]]]:
    """Line 1 ``r s``, then s lines of element indices."""
    lines = [l.strip() for l in text.splitlines() if l.strip() and not l.strip().startswith("#")]
    if not lines:
        raise ValueError("empty set-system input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'r s'")
    r, s = int(head[0]), int(head[1])
    if len(lines) - 1 != s:
        raise ValueError(f"expected {s} set lines, got {len(lines) - 1}")
    return r, [[int(t) for t in l.split()] for l in lines[1:]]
