"""Structural axioms as executable checks, MoV bounds and extremal tournaments."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import ReversalFunction, WeightedTournament, apply_reversal
from .generators import rng_for, uniform_random
from .mov import mov
from .oracle import mov_table
from .solutions import SOLUTION_NAMES, borda_scores, covering_matrix, winners


@dataclass(frozen=True)
class Verdict:
    """Outcome of one axiom check on one instance."""

    prop: str
    solution: str
    holds: bool
    detail: str = ""
    scale: str = ""

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class DegreeVerdict:
    solution: str
    strict: bool
    equal: bool
    strong: bool
    violations: dict = field(default_factory=dict)


def _scale(T: WeightedTournament) -> str:
    return f"m={T.m},n={T.n}"


def _check_solution(S: str):
    if S not in SOLUTION_NAMES:
        raise ValueError(f"unknown solution {S!r}")


def check_monotonicity(S: str, T: WeightedTournament, a: int, b: int) -> Verdict:
    """Reinforcing a winner a against b keeps it winning."""
    _check_solution(S)
    if T.w[a, b] >= T.n:
        raise ValueError("w[a][b] = n leaves nothing to reinforce")
    if a not in winners(T, S):
        return Verdict("monotonicity", S, True, "vacuous", _scale(T))
    T2 = apply_reversal(T, ReversalFunction.from_entries(T.m, {(a, b): 1}))
    ok = a in winners(T2, S)
    return Verdict("monotonicity", S, ok, "" if ok else f"a={a} b={b}", _scale(T))


def check_mov_monotonicity(S: str, T: WeightedTournament, a: int, b: int,
                           method: str = "auto") -> Verdict:
    """Reinforcing a against b never lowers its MoV."""
    _check_solution(S)
    if T.w[a, b] >= T.n:
        raise ValueError("w[a][b] = n leaves nothing to reinforce")
    T2 = apply_reversal(T, ReversalFunction.from_entries(T.m, {(a, b): 1}))
    before = mov(T, a, S, method).value
    after = mov(T2, a, S, method).value
    ok = after >= before
    return Verdict("mov-monotonicity", S, ok, f"{before} -> {after}", _scale(T))


def transfer(T: WeightedTournament, a: int, b: int, c: int) -> WeightedTournament:
    """Move one unit of c's defeat from b's column to a's."""
    Q = ReversalFunction.from_entries(T.m, {(b, c): -1, (a, c): 1})
    return apply_reversal(T, Q)


def check_transfer_monotonicity(S: str, T: WeightedTournament, a: int, b: int, c: int) -> Verdict:
    _check_solution(S)
    if len({a, b, c}) != 3:
        raise ValueError("a, b, c must be distinct")
    if T.w[b, c] <= 0 or T.w[a, c] >= T.n:
        raise ValueError("transfer needs w[b][c] > 0 and w[a][c] < n")
    if a not in winners(T, S):
        return Verdict("transfer-monotonicity", S, True, "vacuous", _scale(T))
    ok = a in winners(transfer(T, a, b, c), S)
    return Verdict("transfer-monotonicity", S, ok, "" if ok else f"a={a} b={b} c={c}", _scale(T))


def mov_values(T: WeightedTournament, S: str, exhaustive: bool = True) -> list[int]:
    if exhaustive:
        table = mov_table(T, (S,))
        return [table[(S, x)] for x in range(T.m)]
    return [mov(T, x, S).value for x in range(T.m)]


def check_cover_consistency(S: str, T: WeightedTournament, values=None) -> Verdict:
    """x covers y implies MoV(x) >= MoV(y), and y winning implies x winning."""
    _check_solution(S)
    win = winners(T, S)
    C = covering_matrix(T)
    pairs = [(int(x), int(y)) for x, y in np.argwhere(C)]
    if not pairs:
        return Verdict("cover-consistency", S, True, "vacuous", _scale(T))
    for x, y in pairs:
        if y in win and x not in win:
            return Verdict("cover-consistency", S, False, f"{y} wins but its coverer {x} does not",
                           _scale(T))
    if values is None:
        values = mov_values(T, S)
    for x, y in pairs:
        if values[x] < values[y]:
            return Verdict("cover-consistency", S, False,
                           f"{x} covers {y} but MoV {values[x]} < {values[y]}", _scale(T))
    return Verdict("cover-consistency", S, True, f"{len(pairs)} covering pairs", _scale(T))


def check_degree_consistency(S: str, T: WeightedTournament, values=None) -> DegreeVerdict:
    """Does the MoV order follow the weighted outdegree order on T?"""
    _check_solution(S)
    if values is None:
        values = mov_values(T, S)
    deg = borda_scores(T)
    viol = {}
    for x in range(T.m):
        for y in range(T.m):
            if x == y:
                continue
            if deg[x] > deg[y] and not values[x] > values[y]:
                viol.setdefault("strict", (x, y))
            if deg[x] == deg[y] and values[x] != values[y]:
                viol.setdefault("equal", (x, y))
            if deg[x] >= deg[y] and not values[x] >= values[y]:
                viol.setdefault("strong", (x, y))
    return DegreeVerdict(S, "strict" not in viol, "equal" not in viol, "strong" not in viol, viol)


def search_transfer_violation(S: str, trials: int, seed: int, m: int = 4, n: int = 10,
                              generator=uniform_random):
    """First trial whose random (T, a, b, c) breaks transfer-monotonicity, or None."""
    for i in range(trials):
        rng = rng_for(seed, i)
        T = generator(m, n, seed=rng)
        a, b, c = (int(v) for v in rng.choice(m, 3, replace=False))
        if T.w[b, c] == 0 or T.w[a, c] == T.n:
            continue
        if not check_transfer_monotonicity(S, T, a, b, c):
            return i, T, (a, b, c)
    return None


def search_degree_violation(S: str, kind: str, trials: int, seed: int, m: int = 4, n: int = 4,
                            generator=uniform_random):
    """First random tournament violating the given degree-consistency kind, or None."""
    for i in range(trials):
        T = generator(m, n, seed=rng_for(seed, i))
        v = check_degree_consistency(S, T)
        if kind in v.violations:
            return i, T, v.violations[kind]
    return None


def mov_bounds(S: str, n: int, m: int) -> tuple[int, int]:
    """(largest destructive MoV, smallest constructive MoV) over all tournaments."""
    _check_solution(S)
    if m < 2:
        raise ValueError("bounds need at least two alternatives")
    if n < 1:
        raise ValueError("n must be positive")
    if m == 2:
        # a strict win needs floor(n/2)+1, but a tie already makes both winners
        return n // 2 + 1, -((n + 1) // 2)
    if S == "BO":
        if m == 3:
            # n(m-2)/2 + 1 undershoots here: a Condorcet winner over a tied
            # pair needs floor(3n/4) + 1 (exhaustively confirmed for n <= 20)
            return 3 * n // 4 + 1, -n
        return n * (m - 2) // 2 + 1, -n * (m - 2)
    if S == "SC":
        return n + (m - 1) // 2, -((n + 1) // 2) * (m - 1)
    half = n // 2 + 1
    return half + n * (m - 2) // 2, -math.ceil(math.log2(m) * half)


def extremal_tournament(S: str, direction: str, n: int, m: int) -> tuple[WeightedTournament, int]:
    """Tournament and alternative whose MoV attains ``mov_bounds`` exactly."""
    _check_solution(S)
    if m < 3:
        raise ValueError("constructions need m >= 3")
    w = np.zeros((m, m), dtype=np.int64)
    if direction == "destructive" and S in ("BO", "wUC"):
        if n % 2:
            raise ValueError("construction needs even n")
        w[:] = n // 2
        w[0, :] = n
        w[:, 0] = 0
        np.fill_diagonal(w, 0)
        return WeightedTournament(w, n), 0
    if direction == "constructive" and S == "BO":
        iu, ju = np.triu_indices(m, 1)
        w[iu, ju] = (n + 1) // 2
        w[ju, iu] = n - (n + 1) // 2
        w[0, 1:], w[1:, 0] = n, 0
        w[:-1, m - 1], w[m - 1, :-1] = n, 0
        np.fill_diagonal(w, 0)
        return WeightedTournament(w, n), m - 1
    if direction == "destructive" and S == "SC":
        if m % 2:
            raise ValueError("construction needs even m")
        k = m - 1
        half = (m - 2) // 2
        w[0, 1:], w[1:, 0] = n, 0
        for i in range(k):
            for step in range(1, half + 1):
                j = (i + step) % k
                w[1 + i, 1 + j], w[1 + j, 1 + i] = n, 0
        return WeightedTournament(w, n), 0
    if direction == "constructive" and S == "SC":
        if n % 2:
            raise ValueError("construction needs even n")
        w[:] = n // 2
        w[:-1, m - 1], w[m - 1, :-1] = n, 0
        np.fill_diagonal(w, 0)
        return WeightedTournament(w, n), m - 1
    if direction not in ("destructive", "constructive"):
        raise ValueError(f"unknown direction {direction!r}")
    raise ValueError(f"no tight construction for {direction} {S}")
