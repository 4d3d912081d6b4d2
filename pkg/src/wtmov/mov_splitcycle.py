"""Margin of victory for Split Cycle.

Destructive MoV of a winner ``a``: some rival ``d`` must end up with a margin
``l`` over ``a`` that beats every a->d path.  For fixed ``(d, l)`` that costs
raising margin(d, a) to ``l`` plus a minimum cut separating ``a`` from ``d``
in the graph of margins ``>= l``.  All costs are in weight units: moving one
unit of weight changes a margin by 2.

Constructive MoV is NP-hard; it is solved exactly, either by exhaustive
enumeration or by a mixed-integer program.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import exact
from .core import MovResult, ReversalFunction, WeightedTournament, apply_reversal
from .flow import FlowNetwork, max_flow
from .oracle import BudgetExhausted, GuardError, search
from .solutions import split_cycle_winners

ENUM_MAX_M = 5
ENUM_MAX_N = 10


@dataclass(frozen=True)
class CutNetwork:
    network: FlowNetwork
    source: int
    sink: int
    base_cost: int
    l: int


def threshold_range(n: int) -> range:
    """Admissible values of l: same parity as n, from 1 or 2 up to n."""
    return range(2 if n % 2 == 0 else 1, n + 1, 2)


def build_sc_cut_network(T: WeightedTournament, a: int, d: int, l: int) -> CutNetwork:
    if a == d:
        raise ValueError("a and d must differ")
    if (l - T.n) % 2 or l not in threshold_range(T.n):
        raise ValueError(f"l={l} must share parity with n={T.n} and lie in 1..{T.n} (0 excluded)")
    mg = T.margins
    net = FlowNetwork()
    for v in range(T.m):
        net.add_node(0, v)
    for x, y in zip(*np.nonzero(mg >= l)):
        x, y = int(x), int(y)
        if {x, y} == {a, d}:
            continue
        net.add_edge(x, y, (int(mg[x, y]) - (l - 2)) // 2, 0, (x, y))
    base = max(0, (l - int(mg[d, a])) // 2)
    return CutNetwork(net, a, d, base, l)


def _reaches(T_margins: np.ndarray, a: int, d: int, l: int) -> bool:
    # is there an a->d path using margins >= l, avoiding the pair {a, d}?
    ok = T_margins >= l
    ok[a, d] = ok[d, a] = False
    seen = {a}
    stack = [a]
    while stack:
        u = stack.pop()
        for v in np.flatnonzero(ok[u]):
            v = int(v)
            if v == d:
                return True
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return False


def mov_sc_destructive(T: WeightedTournament, a: int) -> MovResult:
    if a not in split_cycle_winners(T):
        raise ValueError(f"alternative {a} is not a Split Cycle winner")
    if T.m < 2:
        raise ValueError("a lone alternative cannot lose")
    mg = T.margins
    candidates = []
    for l in threshold_range(T.n):
        for d in range(T.m):
            if d != a:
                candidates.append((max(0, (l - int(mg[d, a])) // 2), l, d))
    # cheapest base costs first, so pruning kicks in early; ties resolve to (l, d)
    candidates.sort()
    best = None
    for base, l, d in candidates:
        if best is not None and base >= best[0]:
            if base > best[0]:
                break
            # only a cut-free candidate with a smaller (l, d) can still tie
            if (l, d) < best[1:3] and not _reaches(mg, a, d, l):
                best = (base, l, d, base, [])
            continue
        if _reaches(mg, a, d, l):
            cn = build_sc_cut_network(T, a, d, l)
            flow = max_flow(cn.network, a, d)
            cost, cut = base + flow.value, [cn.network.edges[i] for i in flow.cut]
        else:
            cost, cut = base, []
        if best is None or (cost, l, d) < (best[0], best[1], best[2]):
            best = (cost, l, d, base, cut)
    cost, l, d, base, cut = best
    r = np.zeros((T.m, T.m), dtype=np.int64)
    r[d, a] += base
    r[a, d] -= base
    for e in cut:
        r[e.head, e.tail] += e.capacity
        r[e.tail, e.head] -= e.capacity
    R = ReversalFunction(r)
    assert R.size == cost
    assert a not in split_cycle_winners(apply_reversal(T, R)), "witness failed"
    return MovResult(cost, R, "sc-mincut")


def mov_sc_constructive_exact(T: WeightedTournament, d: int, budget: int | None = None,
                              method: str = "auto", override_guard: bool = False) -> MovResult:
    """Exact constructive MoV.

    ``method`` is ``"enumerate"`` (exhaustive, guarded to small instances),
    ``"milp"`` (integer program via HiGHS) or ``"auto"`` (enumeration when
    m <= 4 and n <= 10, otherwise the integer program).
    """
    if d in split_cycle_winners(T):
        raise ValueError(f"alternative {d} already is a Split Cycle winner")
    cap = ((T.n + 1) // 2) * (T.m - 1)
    limit = cap if budget is None else min(cap, budget)
    if method == "auto":
        method = "enumerate" if T.m <= 4 and T.n <= 10 else "milp"
    if method == "enumerate":
        if not override_guard and (T.m > ENUM_MAX_M or T.n > ENUM_MAX_N):
            raise GuardError(f"exhaustive constructive search limited to m <= {ENUM_MAX_M}, "
                             f"n <= {ENUM_MAX_N}; constructive Split Cycle MoV is NP-hard")
        return search(T, d, "SC", limit, solver="sc-enumeration")
    if method == "milp":
        R = exact.constructive_milp(T, d, "SC", limit)
        if R is None:
            raise BudgetExhausted(f"no constructive reversal of size <= {limit}")
        assert d in split_cycle_winners(apply_reversal(T, R)), "witness failed"
        return MovResult(-R.size, R, "sc-milp")
    raise ValueError(f"unknown method {method!r}")


def dominating_set_reduction(r: int, edges) -> WeightedTournament:
    """Tournament where x's constructive MoV equals the minimum dominating set size.

    Alternatives: x = 0, a_i = 1 + i, b_i = 1 + r + i for vertices i in 0..r-1.
    The construction needs weights up to r + 2, so for r = 1 the weight
    parameter is raised to 2 (n = 4); the margins it relies on are unchanged.
    """
    if r < 1:
        raise ValueError("the graph needs at least one vertex")
    k = max(r, 2)
    n = 2 * k
    m = 1 + 2 * r
    adj = np.eye(r, dtype=bool)
    for u, v in edges:
        if not (0 <= u < r and 0 <= v < r):
            raise ValueError(f"edge ({u}, {v}) out of range")
        adj[u, v] = adj[v, u] = True
    w = np.full((m, m), k, dtype=np.int64)
    np.fill_diagonal(w, 0)
    A = [1 + i for i in range(r)]
    B = [1 + r + i for i in range(r)]
    for i in range(r):
        w[0, A[i]], w[A[i], 0] = k + 1, k - 1
        w[B[i], 0], w[0, B[i]] = k + 2, k - 2
        for j in range(r):
            hi = n if adj[i, j] else k
            w[A[i], B[j]], w[B[j], A[i]] = hi, n - hi
    labels = ["x"] + [f"a{i}" for i in range(r)] + [f"b{i}" for i in range(r)]
    return WeightedTournament(w, n, labels)


def read_graph(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Edge list ``u v`` per line; an optional ``vertices: r`` line sets r."""
    edges = []
    r = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            r = int(line.split(":", 1)[1])
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        edges.append((int(parts[0]), int(parts[1])))
    if r is None:
        r = 1 + max((max(e) for e in edges), default=0)
    return r, edges
