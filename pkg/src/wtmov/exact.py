"""Exact constructive MoV for Split Cycle and wUC as integer programs.

Both problems are NP-hard, so exhaustive enumeration stops being usable
beyond four alternatives.  These formulations are solved with HiGHS through
``scipy.optimize.milp``; the optimum is read back as an integer reversal and
re-verified by the caller.

Shared variables, one pair ``(i, j)`` with ``i < j`` at a time:
``p`` and ``q`` are non-negative integers, ``w'[i][j] = w[i][j] + p - q``,
and the objective is ``sum(p + q)``.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp
from scipy.sparse import coo_matrix

from .core import ReversalFunction, WeightedTournament
from .oracle import GuardError

# the Split Cycle program grows like m^3 binaries; beyond this it gets slow
MAX_M = 20


class _Model:
    def __init__(self, T: WeightedTournament):
        self.T = T
        self.pairs = list(combinations(range(T.m), 2))
        self.pid = {pq: k for k, pq in enumerate(self.pairs)}
        self.lb: list[float] = []
        self.ub: list[float] = []
        self.integrality: list[int] = []
        self.rows: list[tuple[dict[int, float], float, float]] = []
        for i, j in self.pairs:
            self.var(0, int(T.w[j, i]))  # p: raise w[i][j]
            self.var(0, int(T.w[i, j]))  # q: lower w[i][j]

    def var(self, lo: float, hi: float, integer: bool = True) -> int:
        self.lb.append(lo)
        self.ub.append(hi)
        self.integrality.append(1 if integer else 0)
        return len(self.lb) - 1

    def weight(self, x: int, y: int) -> tuple[dict[int, float], float]:
        """w'[x][y] as (coefficients, constant)."""
        if x < y:
            k = self.pid[(x, y)]
            return {2 * k: 1.0, 2 * k + 1: -1.0}, float(self.T.w[x, y])
        k = self.pid[(y, x)]
        return {2 * k: -1.0, 2 * k + 1: 1.0}, float(self.T.w[x, y])

    def margin(self, x: int, y: int) -> tuple[dict[int, float], float]:
        coef, const = self.weight(x, y)
        return {v: 2 * c for v, c in coef.items()}, float(2 * const - self.T.n)

    def add(self, coef: dict[int, float], lo: float, hi: float):
        self.rows.append((coef, lo, hi))

    def solve(self, budget: int | None) -> ReversalFunction | None:
        nv = len(self.lb)
        c = np.zeros(nv)
        c[: 2 * len(self.pairs)] = 1.0
        rows = list(self.rows)
        if budget is not None:
            rows.append(({v: 1.0 for v in range(2 * len(self.pairs))}, -np.inf, float(budget)))
        ri, ci, vals = [], [], []
        lo = np.empty(len(rows))
        hi = np.empty(len(rows))
        for r, (coef, l, h) in enumerate(rows):
            for v, a in coef.items():
                ri.append(r)
                ci.append(v)
                vals.append(a)
            lo[r], hi[r] = l, h
        A = coo_matrix((vals, (ri, ci)), shape=(len(rows), nv)).tocsr()
        res = milp(c, constraints=LinearConstraint(A, lo, hi),
                   integrality=np.array(self.integrality),
                   bounds=Bounds(np.array(self.lb, float), np.array(self.ub, float)),
                   options={"mip_rel_gap": 0.0, "presolve": True})
        if res.status == 2:  # infeasible
            return None
        if res.status != 0 or res.x is None:
            raise RuntimeError(f"MILP solver failed: {res.message}")
        x = np.rint(res.x).astype(np.int64)
        r = np.zeros((self.T.m, self.T.m), dtype=np.int64)
        for k, (i, j) in enumerate(self.pairs):
            delta = x[2 * k] - x[2 * k + 1]
            r[i, j], r[j, i] = delta, -delta
        return ReversalFunction(r)


def _shift(coef: dict[int, float], var: int, a: float) -> dict[int, float]:
    out = dict(coef)
    out[var] = out.get(var, 0.0) + a
    return out


def _wuc(model: _Model, d: int):
    """d must reach every y by a decreasing path of length at most 2."""
    T = model.T
    n = T.n
    for y in range(T.m):
        if y == d:
            continue
        choices = []
        # direct: margin'(d, y) >= 0, relaxed by n when off
        u = model.var(0, 1)
        coef, const = model.margin(d, y)
        model.add(_shift(coef, u, -n), -const - n, np.inf)
        choices.append(u)
        for z in range(T.m):
            if z in (d, y):
                continue
            # via z: w'(d, z) - w'(y, z) >= 1, relaxed by n + 1 when off
            v = model.var(0, 1)
            c1, k1 = model.weight(d, z)
            c2, k2 = model.weight(y, z)
            coef = dict(c1)
            for var, a in c2.items():
                coef[var] = coef.get(var, 0.0) - a
            model.add(_shift(coef, v, -(n + 1)), 1 - (k1 - k2) - (n + 1), np.inf)
            choices.append(v)
        model.add({v: 1.0 for v in choices}, 1, np.inf)


def _split_cycle(model: _Model, d: int):
    """For each y: margin'(y, d) <= 0, or a d->y path with margins >= margin'(y, d)."""
    T = model.T
    n = T.n
    m = T.m
    for y in range(m):
        if y == d:
            continue
        direct = model.var(0, 1)
        cyd, kyd = model.margin(y, d)
        # margin'(y, d) <= n * (1 - direct)
        model.add(_shift(cyd, direct, n), -np.inf, n - kyd)
        # arcs into d or out of y never help a simple d->y path
        arcs = [(u, v) for u in range(m) for v in range(m) if u != v and v != d and u != y]
        flow = {}
        for u, v in arcs:
            f = model.var(0, 1, integer=False)
            z = model.var(0, 1)
            flow[(u, v)] = f
            model.add({f: 1.0, z: -1.0}, -np.inf, 0)
            cuv, kuv = model.margin(u, v)
            # margin'(u, v) - margin'(y, d) >= -2n * (1 - z)
            coef = dict(cuv)
            for var, a in cyd.items():
                coef[var] = coef.get(var, 0.0) - a
            model.add(_shift(coef, z, -2 * n), -(kuv - kyd) - 2 * n, np.inf)
            # margin'(u, v) >= 1 - (n + 1) * (1 - z)
            model.add(_shift(cuv, z, -(n + 1)), 1 - kuv - (n + 1), np.inf)
        # one unit from d to y unless the direct option holds
        for node in range(m):
            coef: dict[int, float] = {}
            for (u, v), f in flow.items():
                if u == node:
                    coef[f] = coef.get(f, 0.0) + 1.0
                if v == node:
                    coef[f] = coef.get(f, 0.0) - 1.0
            if node == d:
                model.add(_shift(coef, direct, 1.0), 1, 1)
            elif node == y:
                model.add(_shift(coef, direct, -1.0), -1, -1)
            elif coef:
                model.add(coef, 0, 0)


def constructive_milp(T: WeightedTournament, d: int, concept: str,
                      budget: int | None = None) -> ReversalFunction | None:
    """Minimum reversal that makes ``d`` a winner, or None beyond ``budget``."""
    if T.m > MAX_M:
        raise GuardError(f"integer program limited to m <= {MAX_M}; constructive "
                         f"{concept} MoV is NP-hard")
    model = _Model(T)
    if concept == "SC":
        _split_cycle(model, d)
    elif concept == "wUC":
        _wuc(model, d)
    else:
        raise ValueError(f"no integer program for {concept!r}")
    return model.solve(budget)
