"""Vertex connectivity of the incidence bipartite graph.

A hypergraph is k-connected when its incidence bipartite graph is k-connected
in the usual graph sense.  Connectivity is computed with unit-capacity
node-splitting max-flow over the standard non-adjacent-pair sweep; augmenting
paths are found lowest-id-first so witnesses are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import EmptyGraph
from .hypergraph import Hypergraph, IncidenceGraph


@dataclass(frozen=True)
class Graph:
    """Plain undirected graph on nodes 0..n-1, adjacency as frozensets."""

    n: int
    adj: tuple[frozenset[int], ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u != v:
                sets[u].add(v)
                sets[v].add(u)
        return Graph(n, tuple(frozenset(s) for s in sets))

    def without(self, removed) -> "Graph":
        removed = set(removed)
        keep = [v for v in range(self.n) if v not in removed]
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(frozenset(index[u] for u in self.adj[v] if u not in removed)
                    for v in keep)
        return Graph(len(keep), adj)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for u in self.adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n


@dataclass(frozen=True)
class ConnectivityWitness:
    """Outcome of a k-connectivity query.

    ``kind`` is "connected_k" or "separator".  For separators the node set is
    over the incidence graph (mixed vertex- and edge-nodes) and its removal
    disconnects it; ``separator`` is None only in the degenerate complete-like
    case where no separator exists but the node count is too small for k.
    """

    kind: str
    value: int
    separator: tuple[int, ...] | None = None


def incidence_as_graph(g: IncidenceGraph) -> Graph:
    return Graph(g.node_count, g.neighbors())


def _max_flow_node_split(g: Graph, s: int, t: int) -> tuple[int, set[int]]:
    """Max number of internally disjoint s,t-paths and a minimum vertex cut.

    Nodes other than s,t are split into in/out halves with unit capacity.
    BFS augmentation explores neighbors in ascending id order.
    """
    n = g.n
    # node v -> in = 2v, out = 2v+1; s and t use only their "out"/"in" side
    INF = float("inf")
    cap: dict[tuple[int, int], float] = {}

    def add(a: int, b: int, c: float) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    for v in range(n):
        if v not in (s, t):
            add(2 * v, 2 * v + 1, 1)
    for v in range(n):
        vo = 2 * v + 1 if v != t else 2 * v
        for u in sorted(g.adj[v]):
            ui = 2 * u if u != s else 2 * u + 1
            add(vo, ui, INF)

    source, sink = 2 * s + 1, 2 * t
    adj_out: dict[int, list[int]] = {}
    for (a, b) in cap:
        adj_out.setdefault(a, []).append(b)
    for a in adj_out:
        adj_out[a].sort()

    flow = 0
    while True:
        parent = {source: None}
        queue = deque([source])
        while queue:
            a = queue.popleft()
            if a == sink:
                break
            for b in adj_out.get(a, ()):
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        # unit capacities on split arcs: bottleneck is always 1
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1

    reach = {source}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for b in adj_out.get(a, ()):
            if b not in reach and cap[(a, b)] > 0:
                reach.add(b)
                queue.append(b)
    cut = {v for v in range(n)
           if v not in (s, t) and 2 * v in reach and 2 * v + 1 not in reach}
    return flow, cut


def graph_vertex_connectivity(g: Graph) -> tuple[int, tuple[int, ...] | None]:
    """Vertex connectivity with a minimum separator when one exists.

    Returns (n-1, None) for complete graphs and (0, ()) when disconnected.
    """
    if g.n < 2:
        raise EmptyGraph("need at least 2 nodes")
    if not g.is_connected():
        return 0, ()
    pairs = [(s, t) for s in range(g.n) for t in range(s + 1, g.n)
             if t not in g.adj[s]]
    if not pairs:
        return g.n - 1, None
    best = None
    best_cut: tuple[int, ...] | None = None
    for s, t in pairs:
        flow, cut = _max_flow_node_split(g, s, t)
        if best is None or flow < best:
            best = flow
            best_cut = tuple(sorted(cut))
            if best == 0:  # unreachable for connected g, defensive
                break
    assert best_cut is not None and len(best_cut) == best
    # independent verification: removing the separator must disconnect
    assert not g.without(best_cut).is_connected()
    return best, best_cut


def is_two_connected_graph(g: Graph) -> bool:
    """Linear-time 2-connectivity (connected, no articulation point, n >= 3)."""
    if g.n < 3:
        return False
    num = [-1] * g.n
    low = [0] * g.n
    counter = 0
    # iterative DFS from node 0
    stack: list[tuple[int, int, iter]] = [(0, -1, iter(sorted(g.adj[0])))]
    num[0] = low[0] = counter
    counter += 1
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for u in it:
            if num[u] == -1:
                num[u] = low[u] = counter
                counter += 1
                if v == 0:
                    root_children += 1
                stack.append((u, v, iter(sorted(g.adj[u]))))
                advanced = True
                break
            elif u != parent:
                low[v] = min(low[v], num[u])
        if not advanced:
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if pv != 0 and low[v] >= num[pv]:
                    return False  # pv is an articulation point
    if counter != g.n:
        return False  # disconnected
    return root_children <= 1


def _incidence_connectivity(g: IncidenceGraph) \
        -> tuple[int, tuple[int, ...] | None]:
    """Minimum node cut separating two vertex-nodes of the incidence graph.

    Every edge-node has degree r, so an unrestricted cut of size r can
    always strand a single edge-node; such cuts say nothing about the
    hypergraph.  The sweep therefore runs over vertex-node pairs only
    (never adjacent in a bipartite incidence graph), so the value is not
    capped at r.  Returns (0, ()) when two vertex-nodes are already in
    different components and (cut-size, separator) otherwise; the
    separator may mix vertex- and edge-nodes.
    """
    plain = incidence_as_graph(g)
    if g.left < 2:
        raise EmptyGraph("need at least 2 vertex-nodes")
    if not plain.is_connected():
        return 0, ()
    best = None
    best_cut: tuple[int, ...] | None = None
    for s in range(g.left):
        for t in range(s + 1, g.left):
            flow, cut = _max_flow_node_split(plain, s, t)
            if best is None or flow < best:
                best = flow
                best_cut = tuple(sorted(cut))
    assert best_cut is not None and len(best_cut) == best
    # removal must split the surviving vertex-nodes into >= 2 components
    removed = set(best_cut)
    keep = [v for v in range(plain.n) if v not in removed]
    index = {v: i for i, v in enumerate(keep)}
    sub = plain.without(best_cut)
    seen: set[int] = set()
    comps_with_vertex = 0
    for v in keep:
        i = index[v]
        if i in seen:
            continue
        stack = [i]
        seen.add(i)
        comp = {i}
        while stack:
            for u in sub.adj[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    comp.add(u)
                    stack.append(u)
        if any(keep[j] < g.left for j in comp):
            comps_with_vertex += 1
    assert comps_with_vertex >= 2
    return best, best_cut


def vertex_connectivity(g: IncidenceGraph) -> int:
    """Connectivity of the hypergraph read off its incidence graph: the
    minimum number of incidence-graph nodes whose removal separates two
    vertex-nodes."""
    value, _ = _incidence_connectivity(g)
    return value


def is_k_connected(h: Hypergraph, k: int) -> ConnectivityWitness:
    """Check k-connectivity of ``h`` via its incidence graph.

    connected_k requires connectivity >= k and more than k nodes; otherwise
    the deterministic minimum separator is returned.
    """
    g = h.incidence_graph()
    value, separator = _incidence_connectivity(g)
    if value >= k and g.node_count > k:
        return ConnectivityWitness(kind="connected_k", value=value)
    return ConnectivityWitness(kind="separator", value=value,
                               separator=separator)


def is_two_connected(h: Hypergraph) -> bool:
    """Fast 2-connectivity check of the incidence graph (no witness)."""
    return is_two_connected_graph(incidence_as_graph(h.incidence_graph()))
