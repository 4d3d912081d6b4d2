"""Margin of victory for Borda.

Destructive: for a unique winner ``a`` pick a rival ``b`` and close the score
gap greedily, first on the pair (a, b) where each unit counts twice, then on
pairs touching only one of the two.  Constructive: for each target score
``l`` solve a min-cost flow that redistributes every pair's weight so that
``d`` scores exactly ``l`` and nobody exceeds it; reversed weight costs 1.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .core import MovResult, ReversalFunction, WeightedTournament, apply_reversal
from .flow import FlowNetwork, min_cost_b_flow
from .solutions import borda_scores, borda_winners


def min_winning_borda_score(n: int, m: int) -> int:
    """Smallest score a Borda winner can have: the average, rounded up."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    return (n * (m - 1) + 1) // 2


def _greedy_against(T: WeightedTournament, a: int, b: int, s: np.ndarray) -> np.ndarray:
    """Reversal making b outscore a, greedy on (a,b) then (a,x), (x,b)."""
    w = T.w
    r = np.zeros((T.m, T.m), dtype=np.int64)
    gap = int(s[a] - s[b])
    q = min(int(w[a, b]), gap // 2 + 1)
    r[b, a] += q
    r[a, b] -= q
    gap -= 2 * q
    for x in range(T.m):
        if gap < 0:
            break
        if x == a or x == b:
            continue
        q = min(int(w[a, x]), gap + 1)
        r[x, a] += q
        r[a, x] -= q
        gap -= q
        if gap < 0:
            break
        q = min(int(w[x, b]), gap + 1)
        r[b, x] += q
        r[x, b] -= q
        gap -= q
    assert gap < 0, "greedy failed to dethrone the winner"
    return r


def mov_borda_destructive(T: WeightedTournament, a: int) -> MovResult:
    winners = borda_winners(T)
    if a not in winners:
        raise ValueError(f"alternative {a} is not a Borda winner")
    if T.m < 2:
        raise ValueError("a lone alternative cannot lose")
    if len(winners) > 1:
        # any unit moved away from a breaks the tie
        x = next(x for x in range(T.m) if x != a and T.w[x, a] < T.n)
        R = ReversalFunction.from_entries(T.m, {(x, a): 1})
        return MovResult(1, R, "borda-greedy")
    s = borda_scores(T)
    best = None
    for b in range(T.m):
        if b == a:
            continue
        r = _greedy_against(T, a, b, s)
        size = int(r[r > 0].sum())
        if best is None or size < best[0]:
            best = (size, r)
    R = ReversalFunction(best[1])
    assert a not in borda_winners(apply_reversal(T, R))
    return MovResult(best[0], R, "borda-greedy")


def build_borda_flow_network(T: WeightedTournament, d: int, l: int) -> FlowNetwork:
    """Flow network whose min-cost b-flows are cheapest ways to let d score l.

    Layout: node 0 is the source, then one node per unordered pair in
    lexicographic order, then one node per alternative, then the sink.  Every
    pair node receives the pair's n units and routes them to its endpoints:
    green edges keep existing weight for free, red edges move weight at cost 1.
    """
    m, n = T.m, T.n
    lo, hi = min_winning_borda_score(n, m), n * (m - 1)
    if not lo <= l <= hi:
        raise ValueError(f"target score {l} outside {lo}..{hi}")
    if not 0 <= d < m:
        raise IndexError(f"alternative {d} out of range")
    pairs = list(combinations(range(m), 2))
    total = n * len(pairs)
    net = FlowNetwork()
    s = net.add_node(total, "s")
    pair_nodes = [net.add_node(0, ("pair", v, u)) for v, u in pairs]
    vert = [net.add_node(-l if v == d else 0, ("alt", v)) for v in range(m)]
    t = net.add_node(-(total - l), "t")
    for e in pair_nodes:
        net.add_edge(s, e, n, 0, ("source", net.labels[e][1:]))
    w = T.w
    for e, (v, u) in zip(pair_nodes, pairs):
        net.add_edge(e, vert[v], int(w[v, u]), 0, ("green", v, u))
        net.add_edge(e, vert[v], int(w[u, v]), 1, ("red", v, u))
        net.add_edge(e, vert[u], int(w[u, v]), 0, ("green", u, v))
        net.add_edge(e, vert[u], int(w[v, u]), 1, ("red", u, v))
    for v in range(m):
        if v != d:
            net.add_edge(vert[v], t, l, 0, ("sink", v))
    return net


def reversal_from_borda_flow(T: WeightedTournament, net: FlowNetwork, flows) -> ReversalFunction:
    """New weight of v over u is the flow pair (v,u) sends to v."""
    new_w = np.zeros((T.m, T.m), dtype=np.int64)
    for f, e in zip(flows, net.edges):
        if e.tag[0] in ("green", "red"):
            _, v, u = e.tag
            new_w[v, u] += f
    return ReversalFunction(new_w - T.w)


def mov_borda_constructive(T: WeightedTournament, d: int) -> MovResult:
    if d in borda_winners(T):
        raise ValueError(f"alternative {d} already is a Borda winner")
    s_d = int(borda_scores(T)[d])
    best = None
    for l in range(min_winning_borda_score(T.n, T.m), T.n * (T.m - 1) + 1):
        # moving d's score by |l - s_d| costs at least that much
        if best is not None and abs(l - s_d) >= best[0]:
            if l > s_d:
                break
            continue
        net = build_borda_flow_network(T, d, l)
        flow = min_cost_b_flow(net)
        if flow is None:
            continue
        if best is None or flow.cost < best[0]:
            best = (flow.cost, l, net, flow)
    cost, l, net, flow = best
    R = reversal_from_borda_flow(T, net, flow.flows)
    assert R.size == cost, "flow cost and reversal size disagree"
    T2 = apply_reversal(T, R)
    assert d in borda_winners(T2) and borda_scores(T2)[d] == l
    return MovResult(-cost, R, "borda-flow")
