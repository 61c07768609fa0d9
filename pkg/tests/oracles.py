"""Independent brute-force reference implementations.

Deliberately naive: literal alternating DFS over (vertex, edge) sequences
for cycles and paths, and subset enumeration for connectivity.  These share
no code with the package internals so agreement is meaningful.
"""

from __future__ import annotations

import random
from itertools import combinations

from bergecycles.connectivity import Graph, incidence_as_graph
from bergecycles.hypergraph import Hypergraph, IncidenceGraph, build


def naive_longest_cycle(h: Hypergraph) -> int:
    """Longest Berge cycle by direct alternating DFS; 0 when none exists."""
    best = 0

    def extend(seq: list[int], used_v: set[int], used_e: set[int]) -> None:
        nonlocal best
        v0, last = seq[0], seq[-1]
        if len(seq) >= 2 and len(seq) > best:
            for e in range(h.m):
                if e not in used_e and {last, v0} <= h.edge_sets[e]:
                    best = len(seq)
                    break
        for e in range(h.m):
            if e in used_e or last not in h.edge_sets[e]:
                continue
            for w in sorted(h.edge_sets[e]):
                # canonical start: the cycle's minimum vertex opens it
                if w <= v0 or w in used_v:
                    continue
                seq.append(w)
                used_v.add(w)
                used_e.add(e)
                extend(seq, used_v, used_e)
                used_e.discard(e)
                used_v.discard(w)
                seq.pop()
        return

    for v in range(h.n):
        extend([v], {v}, set())
    return best


def naive_longest_path(h: Hypergraph, u: int, v: int) -> int | None:
    """Longest Berge u,v-path length (edge count), None when unreachable."""
    best: list[int | None] = [None]

    def extend(seq: list[int], used_v: set[int], used_e: set[int]) -> None:
        if seq[-1] == v:
            if best[0] is None or len(used_e) > best[0]:
                best[0] = len(used_e)
            return
        for e in range(h.m):
            if e in used_e or seq[-1] not in h.edge_sets[e]:
                continue
            for w in sorted(h.edge_sets[e]):
                if w in used_v:
                    continue
                seq.append(w)
                used_v.add(w)
                used_e.add(e)
                extend(seq, used_v, used_e)
                used_e.discard(e)
                used_v.discard(w)
                seq.pop()

    extend([u], {u}, set())
    return best[0]


def naive_codiameter(h: Hypergraph) -> int:
    worst: int | None = None
    for a in range(h.n):
        for b in range(a + 1, h.n):
            length = naive_longest_path(h, a, b)
            if length is None:
                return 0
            if worst is None or length < worst:
                worst = length
    return worst if worst is not None else 0


def _components_after(adj, removed: set[int], nodes: list[int]) -> list[set]:
    comps = []
    seen: set[int] = set()
    for start in nodes:
        if start in seen or start in removed:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            for u in adj[stack.pop()]:
                if u not in seen and u not in removed:
                    seen.add(u)
                    comp.add(u)
                    stack.append(u)
        comps.append(comp)
    return comps


def brute_graph_connectivity(g: Graph) -> int:
    """Minimum vertex cut by subset enumeration; n-1 for complete graphs."""
    nodes = list(range(g.n))
    for size in range(g.n - 1):
        for cut in combinations(nodes, size):
            comps = _components_after(g.adj, set(cut), nodes)
            if len(comps) > 1:
                return size
    return g.n - 1


def brute_incidence_connectivity(ig: IncidenceGraph) -> int:
    """Smallest node set whose removal separates two vertex-nodes."""
    g = incidence_as_graph(ig)
    nodes = list(range(g.n))
    for size in range(g.n):
        for cut in combinations(nodes, size):
            comps = _components_after(g.adj, set(cut), nodes)
            with_vertex = [c for c in comps if any(v < ig.left for v in c)]
            if len(with_vertex) > 1:
                return size
    raise AssertionError("vertex-nodes cannot be separated")


def random_hypergraph(rng: random.Random, n_max: int = 6,
                      m_max: int = 8, r_choices=(3,)) -> Hypergraph:
    r = rng.choice(r_choices)
    n = rng.randint(r + 1, n_max)
    pool = [tuple(c) for c in combinations(range(n), r)]
    m = rng.randint(1, min(m_max, len(pool)))
    return build(n, r, rng.sample(pool, m))


def random_graph(rng: random.Random, n_max: int = 10,
                 p: float = 0.4) -> Graph:
    n = rng.randint(3, n_max)
    edges = [(a, b) for a in range(n) for b in range(a + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)
