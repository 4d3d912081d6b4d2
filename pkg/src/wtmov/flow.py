"""Integer network flows: max-flow/min-cut and min-cost b-flow.

Networks may carry parallel edges; every edge keeps its position in the edge
list, and all tie-breaking follows that order so results are reproducible.
Balances follow the supply convention: ``b(v) = outflow(v) - inflow(v)``.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, NamedTuple


class Edge(NamedTuple):
    tail: int
    head: int
    capacity: int
    cost: int = 0
    tag: Hashable = None


@dataclass
class FlowNetwork:
    """Nodes with integer balances and an ordered list of directed edges."""

    balances: list[int] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)
    labels: list[Hashable] = field(default_factory=list)

    @property
    def num_nodes(self) -> int:
        return len(self.balances)

    def add_node(self, balance: int = 0, label: Hashable = None) -> int:
        self.balances.append(int(balance))
        self.labels.append(label)
        return len(self.balances) - 1

    def add_edge(self, tail: int, head: int, capacity: int, cost: int = 0,
                 tag: Hashable = None) -> int:
        if capacity < 0:
            raise ValueError("capacities must be non-negative")
        if not (0 <= tail < self.num_nodes and 0 <= head < self.num_nodes):
            raise IndexError("edge endpoint out of range")
        self.edges.append(Edge(tail, head, int(capacity), int(cost), tag))
        return len(self.edges) - 1

    def node(self, label: Hashable) -> int:
        return self.labels.index(label)

    def edge_index(self, tag: Hashable) -> int:
        for i, e in enumerate(self.edges):
            if e.tag == tag:
                return i
        raise KeyError(tag)


@dataclass(frozen=True)
class Flow:
    """Per-edge flow values aligned with ``FlowNetwork.edges``."""

    flows: tuple[int, ...]
    cost: int = 0
    value: int = 0
    cut: tuple[int, ...] = ()
    source_side: frozenset = frozenset()


class _Residual:
    """Residual graph; arc 2i is edge i forward, arc 2i+1 its reverse."""

    def __init__(self, n: int):
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []

    def add(self, u: int, v: int, cap: int, cost: int) -> int:
        a = len(self.to)
        self.to += [v, u]
        self.cap += [cap, 0]
        self.cost += [cost, -cost]
        self.adj[u].append(a)
        self.adj[v].append(a + 1)
        return a

    def push(self, a: int, amount: int):
        self.cap[a] -= amount
        self.cap[a ^ 1] += amount


def max_flow(net: FlowNetwork, s: int, t: int) -> Flow:
    """Edmonds-Karp maximum s-t flow with a minimum cut; balances are ignored."""
    if s == t:
        raise ValueError("source and sink must differ")
    res = _Residual(net.num_nodes)
    for e in net.edges:
        res.add(e.tail, e.head, e.capacity, 0)
    value = 0
    while True:
        parent = [-1] * net.num_nodes
        parent[s] = -2
        queue = deque([s])
        while queue and parent[t] == -1:
            u = queue.popleft()
            for a in res.adj[u]:
                v = res.to[a]
                if res.cap[a] > 0 and parent[v] == -1:
                    parent[v] = a
                    queue.append(v)
        if parent[t] == -1:
            break
        path = []
        v = t
        while v != s:
            a = parent[v]
            path.append(a)
            v = res.to[a ^ 1]
        amount = min(res.cap[a] for a in path)
        for a in path:
            res.push(a, amount)
        value += amount
    side = {i for i, p in enumerate(parent) if p != -1}
    flows = tuple(e.capacity - res.cap[2 * i] for i, e in enumerate(net.edges))
    cut = tuple(i for i, e in enumerate(net.edges) if e.tail in side and e.head not in side)
    cut_capacity = sum(net.edges[i].capacity for i in cut)
    assert cut_capacity == value, "max-flow value differs from cut capacity"
    return Flow(flows, 0, value, cut, frozenset(side))


def min_cost_b_flow(net: FlowNetwork) -> Flow | None:
    """Minimum-cost integral b-flow, or ``None`` when no feasible flow exists.

    Successive shortest paths with Johnson potentials from a super source to
    a super sink.  Costs must be non-negative.
    """
    if sum(net.balances) != 0:
        raise ValueError("balances must sum to zero")
    if any(e.cost < 0 for e in net.edges):
        raise ValueError("negative edge costs are not supported")
    n = net.num_nodes
    S, T = n, n + 1
    res = _Residual(n + 2)
    for e in net.edges:
        res.add(e.tail, e.head, e.capacity, e.cost)
    demand = 0
    for v, b in enumerate(net.balances):
        if b > 0:
            res.add(S, v, b, 0)
            demand += b
        elif b < 0:
            res.add(v, T, -b, 0)
    pot = [0] * (n + 2)
    sent = 0
    inf = float("inf")
    while sent < demand:
        dist = [inf] * (n + 2)
        parent = [-1] * (n + 2)
        dist[S] = 0
        heap = [(0, S)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            for a in res.adj[u]:
                if res.cap[a] <= 0:
                    continue
                v = res.to[a]
                nd = d + res.cost[a] + pot[u] - pot[v]
                if nd < dist[v]:
                    dist[v] = nd
                    parent[v] = a
                    heapq.heappush(heap, (nd, v))
        if dist[T] == inf:
            return None
        for v in range(n + 2):
            if dist[v] < inf:
                pot[v] += dist[v]
        path = []
        v = T
        while v != S:
            a = parent[v]
            path.append(a)
            v = res.to[a ^ 1]
        amount = min(min(res.cap[a] for a in path), demand - sent)
        for a in path:
            res.push(a, amount)
        sent += amount
    flows = tuple(e.capacity - res.cap[2 * i] for i, e in enumerate(net.edges))
    cost = sum(f * e.cost for f, e in zip(flows, net.edges))
    return Flow(flows, cost)


def check_b_flow(net: FlowNetwork, flow: Flow) -> bool:
    """Capacity and balance constraints hold exactly."""
    excess = [0] * net.num_nodes
    for f, e in zip(flow.flows, net.edges):
        if not 0 <= f <= e.capacity:
            return False
        excess[e.tail] += f
        excess[e.head] -= f
    return excess == list(net.balances)


def expand_multiedges(net: FlowNetwork) -> FlowNetwork:
    """Subdivide every edge that has a parallel twin with a fresh midpoint.

    Both halves keep the original capacity; the cost sits on the first half
    only, so every flow keeps its cost.  The half-edges are tagged
    ``(tag, 0)`` and ``(tag, 1)``.  Simple networks come back as a copy.
    """
    count: dict[tuple[int, int], int] = {}
    for e in net.edges:
        count[(e.tail, e.head)] = count.get((e.tail, e.head), 0) + 1
    out = FlowNetwork(list(net.balances), [], list(net.labels))
    for i, e in enumerate(net.edges):
        if count[(e.tail, e.head)] == 1:
            out.edges.append(e)
            continue
        mid = out.add_node(0, ("mid", i))
        out.add_edge(e.tail, mid, e.capacity, e.cost, (e.tag, 0))
        out.add_edge(mid, e.head, e.capacity, 0, (e.tag, 1))
    return out
