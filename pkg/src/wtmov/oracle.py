"""Brute-force margin of victory.

Reversal functions are enumerated as vectors of signed per-pair deltas, one
entry per unordered pair ``i < j`` in lexicographic order, where the delta is
the change applied to ``w[i][j]``.  The size of a reversal is the sum of the
absolute deltas.  Vectors are produced one size class at a time, smallest
first, in lexicographic order inside a class, so the first success found is a
minimum witness.

Winner membership is evaluated on whole size classes at once with numpy.  The
batch rules below are written separately from ``solutions`` on purpose; they
are the reference the polynomial solvers are checked against.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from .core import MovResult, ReversalFunction, WeightedTournament

MAX_M = 4
MAX_N = 10


class GuardError(ValueError):
    """The instance is too large for exhaustive search."""


class BudgetExhausted(RuntimeError):
    """No witness exists within the allowed reversal size."""


def pair_list(m: int) -> list[tuple[int, int]]:
    return list(combinations(range(m), 2))


def delta_bounds(T: WeightedTournament) -> tuple[tuple[int, ...], tuple[int, ...]]:
    pairs = pair_list(T.m)
    lo = tuple(-int(T.w[i, j]) for i, j in pairs)
    hi = tuple(int(T.w[j, i]) for i, j in pairs)
    return lo, hi


@lru_cache(maxsize=4096)
def _size_class(lo: tuple[int, ...], hi: tuple[int, ...], k: int) -> np.ndarray:
    """All delta vectors within bounds with sum |d| == k, lexicographically sorted."""
    p = len(lo)
    if p == 0:
        return np.zeros((1 if k == 0 else 0, 0), dtype=np.int64)
    if p == 1:
        vals = [v for v in (-k, k) if lo[0] <= v <= hi[0]]
        return np.array(sorted(set(vals)), dtype=np.int64).reshape(-1, 1)
    blocks = []
    for v in range(max(lo[0], -k), min(hi[0], k) + 1):
        rest = _size_class(lo[1:], hi[1:], k - abs(v))
        if len(rest):
            blocks.append(np.hstack([np.full((len(rest), 1), v, dtype=np.int64), rest]))
    if not blocks:
        return np.zeros((0, p), dtype=np.int64)
    return np.vstack(blocks)


def size_class(T: WeightedTournament, k: int) -> np.ndarray:
    lo, hi = delta_bounds(T)
    return _size_class(lo, hi, k)


def deltas_to_matrices(m: int, deltas: np.ndarray) -> np.ndarray:
    """Stack of antisymmetric reversal matrices, one per delta row."""
    r = np.zeros((len(deltas), m, m), dtype=np.int64)
    for col, (i, j) in enumerate(pair_list(m)):
        r[:, i, j] = deltas[:, col]
        r[:, j, i] = -deltas[:, col]
    return r


def enumerate_reversals(T: WeightedTournament, k: int) -> Iterator[ReversalFunction]:
    """Every valid reversal of size at most ``k``, smallest sizes first."""
    if k < 0:
        raise ValueError("k must be non-negative")
    for size in range(k + 1):
        for mat in deltas_to_matrices(T.m, size_class(T, size)):
            yield ReversalFunction(mat)


# batch membership: W has shape (B, m, m), result (B, m) booleans

def batch_borda(W: np.ndarray, n: int) -> np.ndarray:
    s = W.sum(axis=2)
    return s == s.max(axis=1, keepdims=True)


def batch_split_cycle(W: np.ndarray, n: int) -> np.ndarray:
    M = W - W.transpose(0, 2, 1)
    P = np.maximum(M, 0)
    m = W.shape[1]
    # max-min matrix powers until the closure is stable
    for _ in range(max(1, int(np.ceil(np.log2(max(m, 2)))) + 1)):
        step = np.minimum(P[:, :, :, None], P[:, None, :, :]).max(axis=2)
        P2 = np.maximum(P, step)
        if np.array_equal(P2, P):
            break
        P = P2
    beats = M.transpose(0, 2, 1)  # beats[b, x, y] = margin(y, x)
    defeated = ((beats > 0) & (beats > P)).any(axis=2)
    return ~defeated


def batch_wuc(W: np.ndarray, n: int) -> np.ndarray:
    B, m, _ = W.shape
    covered = np.zeros((B, m), dtype=bool)
    for x in range(m):
        for y in range(m):
            if x == y:
                continue
            others = [z for z in range(m) if z not in (x, y)]
            c = W[:, y, x] > W[:, x, y]
            if others:
                c &= (W[:, y, others] >= W[:, x, others]).all(axis=1)
            covered[:, x] |= c
    return ~covered


BATCH_RULES = {"BO": batch_borda, "SC": batch_split_cycle, "wUC": batch_wuc}


def members(T: WeightedTournament, concept: str) -> np.ndarray:
    return BATCH_RULES[concept](T.w[None], T.n)[0]


def check_guard(T: WeightedTournament, max_m: int = MAX_M, max_n: int = MAX_N):
    if T.m > max_m or T.n > max_n:
        raise GuardError(f"exhaustive search limited to m <= {max_m}, n <= {max_n} "
                         f"(got m={T.m}, n={T.n})")


def search(T: WeightedTournament, x: int, concept: str, budget: int | None = None,
           solver: str = "oracle") -> MovResult:
    """Smallest reversal flipping x's membership, scanning classes up to ``budget``."""
    rule = BATCH_RULES[concept]
    win = bool(rule(T.w[None], T.n)[0, x])
    total = T.n * T.m * (T.m - 1) // 2
    budget = total if budget is None else min(budget, total)
    for k in range(1, budget + 1):
        deltas = size_class(T, k)
        if not len(deltas):
            continue
        R = deltas_to_matrices(T.m, deltas)
        hit = np.flatnonzero(rule(T.w[None] + R, T.n)[:, x] != win)
        if len(hit):
            witness = ReversalFunction(R[hit[0]])
            return MovResult(k if win else -k, witness, solver)
    raise BudgetExhausted(f"no reversal of size <= {budget} flips alternative {x}")


def brute_force_mov(T: WeightedTournament, x: int, concept: str,
                    max_m: int = MAX_M, max_n: int = MAX_N) -> MovResult:
    if concept not in BATCH_RULES:
        raise ValueError(f"unknown solution {concept!r}")
    if not 0 <= x < T.m:
        raise IndexError(f"alternative {x} out of range")
    if T.m < 2:
        raise ValueError("margin of victory needs at least two alternatives")
    check_guard(T, max_m, max_n)
    return search(T, x, concept)


def mov_table(T: WeightedTournament, concepts=("BO", "SC", "wUC"),
              max_m: int = MAX_M, max_n: int = MAX_N) -> dict[tuple[str, int], int]:
    """Signed MoV of every alternative under every concept, in one scan."""
    check_guard(T, max_m, max_n)
    start = {c: BATCH_RULES[c](T.w[None], T.n)[0] for c in concepts}
    todo = {(c, x) for c in concepts for x in range(T.m)}
    out: dict[tuple[str, int], int] = {}
    k = 0
    while todo:
        k += 1
        deltas = size_class(T, k)
        if not len(deltas):
            if k > T.n * T.m * (T.m - 1) // 2:
                raise BudgetExhausted("exhaustive scan ended with unresolved cells")
            continue
        W = T.w[None] + deltas_to_matrices(T.m, deltas)
        for c in concepts:
            if not any(cc == c for cc, _ in todo):
                continue
            flipped = (BATCH_RULES[c](W, T.n) != start[c][None]).any(axis=0)
            for x in np.flatnonzero(flipped):
                if (c, int(x)) in todo:
                    todo.discard((c, int(x)))
                    out[(c, int(x))] = k if start[c][x] else -k
    return out
