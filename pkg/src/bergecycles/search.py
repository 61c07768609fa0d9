"""Exact longest Berge cycle / Berge path search.

The search runs DFS over vertex sequences whose consecutive pairs co-occur in
some edge; distinct connecting edges are maintained incrementally with a
bipartite matching (pair -> edge), which is an exact feasibility test: a
partial vertex sequence extends to a Berge cycle/path iff its pairs admit a
system of distinct edges.  Pruning:

  * resource bound: current length + min(remaining usable vertices,
    remaining edges) must beat the incumbent;
  * root symmetry for cycles: the start vertex is the minimum id on the
    cycle and the orientation puts the smaller second vertex first;
  * incumbent bound, with an optional search-node budget.

Branching follows the static lowest-degree-first vertex order, ties by id,
so identical inputs yield identical outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExhausted, VertexOutOfRange
from .hypergraph import Hypergraph


@dataclass(frozen=True)
class BergeCycle:
    """Alternating cycle v1,e1,...,vc,ec with {vi, vi+1} in ei (mod c)."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BergePath:
    """Alternating path v1,f1,...,fl,v(l+1); length = number of edges."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class PartialBergePath:
    """Berge path variant starting with an edge: f1,u2,f2,...,fl,u(l+1)."""

    edges: tuple[int, ...]
    vertices: tuple[int, ...]  # u2..u(l+1), same count as edges

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class CycleSearchResult:
    cycle: BergeCycle | None
    complete: bool
    nodes: int


def validate_cycle(h: Hypergraph, c: BergeCycle) -> list[str]:
    """Return all invariant violations of ``c`` against ``h`` (empty = ok)."""
    out: list[str] = []
    vs, es = c.vertices, c.edges
    if len(vs) != len(es):
        out.append(f"vertex count {len(vs)} != edge count {len(es)}")
    if len(vs) < 2:
        out.append(f"length {len(vs)} < 2")
    if len(set(vs)) != len(vs):
        out.append("vertices not distinct")
    if len(set(es)) != len(es):
        out.append("edges not distinct")
    for v in vs:
        if not 0 <= v < h.n:
            out.append(f"vertex {v} out of range")
    for e in es:
        if not 0 <= e < h.m:
            out.append(f"edge id {e} out of range")
    if out:
        return out
    k = len(vs)
    for i in range(k):
        a, b = vs[i], vs[(i + 1) % k]
        if not {a, b} <= h.edge_sets[es[i]]:
            out.append(f"index {i}: {{{a},{b}}} not in edge {es[i]}")
    return out


def validate_path(h: Hypergraph, p: BergePath | PartialBergePath) -> list[str]:
    """Violations of the (partial) Berge path invariants (empty = ok)."""
    out: list[str] = []
    vs, es = p.vertices, p.edges
    partial = isinstance(p, PartialBergePath)
    expect = len(es) if partial else len(es) + 1
    if len(vs) != expect:
        out.append(f"vertex count {len(vs)} != {expect}")
    if len(set(vs)) != len(vs):
        out.append("vertices not distinct")
    if len(set(es)) != len(es):
        out.append("edges not distinct")
    for v in vs:
        if not 0 <= v < h.n:
            out.append(f"vertex {v} out of range")
    for e in es:
        if not 0 <= e < h.m:
            out.append(f"edge id {e} out of range")
    if out:
        return out
    if partial:
        if es and not vs:
            out.append("partial path has edges but no vertex")
        if vs and vs[0] not in h.edge_sets[es[0]]:
            out.append(f"first vertex {vs[0]} not in first edge {es[0]}")
        for i in range(1, len(es)):
            if not {vs[i - 1], vs[i]} <= h.edge_sets[es[i]]:
                out.append(f"index {i}: pair not in edge {es[i]}")
    else:
        for i, e in enumerate(es):
            if not {vs[i], vs[i + 1]} <= h.edge_sets[e]:
                out.append(f"index {i}: pair not in edge {e}")
    return out


class _PairContext:
    """Shared per-hypergraph tables for the sequence searches."""

    def __init__(self, h: Hypergraph):
        self.h = h
        pair_edges: dict[tuple[int, int], list[int]] = {}
        shadow: list[set[int]] = [set() for _ in range(h.n)]
        for eid, e in enumerate(h.edges):
            for a, b in combinations(e, 2):
                pair_edges.setdefault((a, b), []).append(eid)
                shadow[a].add(b)
                shadow[b].add(a)
        self.pair_edges = pair_edges
        # static branching order: lowest degree first, ties by id
        rank = sorted(range(h.n), key=lambda v: (len(h.incident[v]), v))
        pos = [0] * h.n
        for i, v in enumerate(rank):
            pos[v] = i
        self.shadow = [sorted(s, key=lambda v: pos[v]) for s in shadow]
        self.shadow_sets = [frozenset(s) for s in shadow]

    def edges_for(self, a: int, b: int) -> list[int]:
        key = (a, b) if a < b else (b, a)
        return self.pair_edges.get(key, [])


class _Matching:
    """Incremental pair->edge assignment (Kuhn's augmenting search)."""

    def __init__(self, ctx: _PairContext):
        self.ctx = ctx
        self.pairs: list[tuple[int, int]] = []
        self.pair_edge: list[int] = []
        self.owner: dict[int, int] = {}  # edge id -> pair index

    def push(self, a: int, b: int) -> bool:
        """Try to add the pair (a, b); on failure state is unchanged."""
        idx = len(self.pairs)
        self.pairs.append((a, b))
        self.pair_edge.append(-1)
        trail: list[tuple[int, int, int]] = []  # (edge, prev_owner, prev_edge)
        if self._augment(idx, set(), trail):
            return True
        for e, prev_owner, prev_edge in reversed(trail):
            if prev_owner is None:
                del self.owner[e]
            else:
                self.owner[e] = prev_owner
            if prev_owner is not None:
                self.pair_edge[prev_owner] = prev_edge
        self.pairs.pop()
        self.pair_edge.pop()
        return False

    def _augment(self, idx: int, seen: set[int], trail: list) -> bool:
        a, b = self.pairs[idx]
        for e in self.ctx.edges_for(a, b):
            if e in seen:
                continue
            seen.add(e)
            prev = self.owner.get(e)
            if prev is None or self._augment(prev, seen, trail):
                trail.append((e, prev, self.pair_edge[prev] if prev is not None
                              else -1))
                self.owner[e] = idx
                self.pair_edge[idx] = e
                return True
        return False

    def pop(self) -> None:
        e = self.pair_edge.pop()
        self.pairs.pop()
        if e in self.owner and self.owner[e] == len(self.pairs):
            del self.owner[e]

    def assigned(self) -> list[int]:
        return list(self.pair_edge)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int | None):
        self.left = limit

    def tick(self) -> bool:
        if self.left is None:
            return True
        if self.left <= 0:
            return False
        self.left -= 1
        return True


def longest_berge_cycle(h: Hypergraph,
                        node_budget: int | None = None) -> CycleSearchResult:
    """A maximum-length Berge cycle of ``h``, or None when no cycle exists.

    With a node budget the result may be marked incomplete and carries the
    incumbent found so far.
    """
    ctx = _PairContext(h)
    budget = _Budget(node_budget)
    best: list = [0, None]  # length, (vertices, edges)
    cap = min(h.n, h.m)
    nodes_seen = [0]
    exhausted = [False]

    def record(seq: list[int], matching: _Matching) -> None:
        if len(seq) > best[0]:
            best[0] = len(seq)
            best[1] = (tuple(seq), tuple(matching.assigned()))

    def dfs(seq: list[int], used: set[int], matching: _Matching) -> None:
        nodes_seen[0] += 1
        if not budget.tick():
            exhausted[0] = True
            return
        t = len(seq)
        v0, last = seq[0], seq[-1]
        # try to close (needs one extra distinct edge for the wrap pair)
        if t >= 2 and (t == 2 or seq[1] < seq[-1]):
            if v0 in ctx.shadow_sets[last] and matching.push(last, v0):
                record(seq, matching)
                matching.pop()
        if best[0] >= cap:
            return
        rem_v = sum(1 for v in range(v0 + 1, h.n) if v not in used)
        rem_e = h.m - (t - 1)
        if t + min(rem_v, rem_e) <= best[0]:
            return
        for u in ctx.shadow[last]:
            if exhausted[0]:
                return
            if u <= v0 or u in used:
                continue
            if matching.push(last, u):
                seq.append(u)
                used.add(u)
                dfs(seq, used, matching)
                used.remove(u)
                seq.pop()
                matching.pop()

    for v0 in range(h.n):
        if exhausted[0] or best[0] >= cap:
            break
        if h.n - v0 <= best[0]:
            break
        dfs([v0], {v0}, _Matching(ctx))

    if best[1] is None:
        return CycleSearchResult(None, not exhausted[0], nodes_seen[0])
    cycle = BergeCycle(vertices=best[1][0], edges=best[1][1])
    violations = validate_cycle(h, cycle)
    assert not violations, violations
    return CycleSearchResult(cycle, not exhausted[0], nodes_seen[0])


def circumference(h: Hypergraph, node_budget: int | None = None) -> int:
    """Length of a longest Berge cycle; 0 when none exists.

    Raises :class:`BudgetExhausted` (carrying the incumbent length) when the
    node budget runs out before the search is complete.
    """
    res = longest_berge_cycle(h, node_budget=node_budget)
    length = res.cycle.length if res.cycle else 0
    if not res.complete:
        raise BudgetExhausted(length, res.nodes)
    return length


@dataclass(frozen=True)
class PathSearchResult:
    path: BergePath | None
    complete: bool
    reached_target: bool
    nodes: int


def longest_berge_path_between(h: Hypergraph, u: int, v: int,
                               node_budget: int | None = None,
                               at_least: int | None = None) -> BergePath | None:
    """A maximum-length Berge u,v-path, or None when none exists.

    ``at_least`` allows early exit once a path of that length is found
    (used by codiameter screening); the returned path is then not
    necessarily maximum.
    """
    res = _path_search(h, u, v, node_budget, at_least)
    if not res.complete and not res.reached_target:
        raise BudgetExhausted(res.path.length if res.path else None, res.nodes)
    return res.path


def _path_search(h: Hypergraph, u: int, v: int,
                 node_budget: int | None,
                 at_least: int | None) -> PathSearchResult:
    if not 0 <= u < h.n:
        raise VertexOutOfRange(u, h.n)
    if not 0 <= v < h.n:
        raise VertexOutOfRange(v, h.n)
    if u == v:
        raise VertexOutOfRange(v, h.n)
    ctx = _PairContext(h)
    budget = _Budget(node_budget)
    best: list = [-1, None]
    cap = min(h.n - 1, h.m)
    nodes_seen = [0]
    stop = [False]  # budget exhausted or target reached

    def dfs(seq: list[int], used: set[int], matching: _Matching) -> None:
        nodes_seen[0] += 1
        if not budget.tick():
            stop[0] = True
            return
        t = len(seq)
        if seq[-1] == v:
            if t - 1 > best[0]:
                best[0] = t - 1
                best[1] = (tuple(seq), tuple(matching.assigned()))
                if at_least is not None and best[0] >= at_least:
                    stop[0] = True
            return
        if best[0] >= cap:
            return
        rem_v = sum(1 for w in range(h.n) if w not in used)
        rem_e = h.m - (t - 1)
        if (t - 1) + min(rem_v, rem_e) <= best[0]:
            return
        for w in ctx.shadow[seq[-1]]:
            if stop[0]:
                return
            if w in used:
                continue
            if matching.push(seq[-1], w):
                seq.append(w)
                used.add(w)
                dfs(seq, used, matching)
                used.remove(w)
                seq.pop()
                matching.pop()

    dfs([u], {u}, _Matching(ctx))
    reached = at_least is not None and best[0] >= at_least
    if best[1] is None:
        return PathSearchResult(None, not stop[0] or reached, reached,
                                nodes_seen[0])
    path = BergePath(vertices=best[1][0], edges=best[1][1])
    violations = validate_path(h, path)
    assert not violations, violations
    complete = not stop[0] or reached
    return PathSearchResult(path, complete, reached, nodes_seen[0])


def codiameter(h: Hypergraph, node_budget: int | None = None) -> int:
    """Min over all vertex pairs of the longest Berge path length.

    0 when some pair is in different components.  Pairs already known to
    admit a path at least as long as the current minimum are screened with
    an early-exit search.
    """
    if h.n < 2:
        raise VertexOutOfRange(1, h.n)
    current: int | None = None
    for a in range(h.n):
        for b in range(a + 1, h.n):
            res = _path_search(h, a, b, node_budget, at_least=current)
            if not res.complete and not res.reached_target:
                raise BudgetExhausted(current, res.nodes)
            if res.path is None:
                return 0
            if res.reached_target:
                continue
            if current is None or res.path.length < current:
                current = res.path.length
    return current if current is not None else 0
