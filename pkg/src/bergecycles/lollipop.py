"""Cycle-and-path (lollipop) structures and the improvement engine.

A lollipop is a Berge cycle C with an attached path P:

  * ordinary (o): P is a Berge path whose first vertex lies on C, sharing
    exactly that vertex and no edge with C;
  * partial (p): P starts with an edge of C, shares exactly that edge and
    no vertex with C.

Lollipops are ordered by a five-component lexicographic score; the engine
repeatedly applies the first move of a fixed catalog that strictly raises
the score.  The engine is a heuristic: a local fixpoint need not be a
global maximum, so outputs are only ever lower bounds on the circumference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .connectivity import Graph, is_two_connected, is_two_connected_graph
from .errors import (AnchorNotOnCycle, BadRange, InvalidLollipop, NoCycle,
                     NodeNotOnPath, NotTwoConnected)
from .hypergraph import Hypergraph
from .search import (BergeCycle, BergePath, PartialBergePath, validate_cycle,
                     validate_path)


@dataclass(frozen=True)
class Lollipop:
    h: Hypergraph
    cycle: BergeCycle
    path: BergePath | PartialBergePath

    @property
    def kind(self) -> str:
        return "p" if isinstance(self.path, PartialBergePath) else "o"

    @property
    def tip(self) -> int:
        """Last path vertex; the cycle attachment point when the path is empty."""
        return self.path.vertices[-1]

    @property
    def off_vertices(self) -> frozenset[int]:
        return frozenset(self.path.vertices) - frozenset(self.cycle.vertices)


class LollipopScore(NamedTuple):
    """Lexicographic betterness: compare componentwise left to right."""

    c_len: int
    p_len: int
    cross: int
    kind_rank: int  # 1 for ordinary, 0 for partial
    contained: int


@dataclass(frozen=True)
class ReducedEdgeSets:
    h_prime: frozenset[int]
    h_dprime: frozenset[int]


def check_lollipop(lp: Lollipop) -> list[str]:
    """All structural violations (empty list = valid)."""
    out = validate_cycle(lp.h, lp.cycle)
    out += validate_path(lp.h, lp.path)
    cyc_v = set(lp.cycle.vertices)
    cyc_e = set(lp.cycle.edges)
    path_v = set(lp.path.vertices)
    path_e = set(lp.path.edges)
    if lp.kind == "o":
        if not lp.path.vertices or lp.path.vertices[0] not in cyc_v:
            out.append("ordinary path must start on the cycle")
        if len(path_v & cyc_v) != 1:
            out.append("ordinary lollipop must share exactly one vertex")
        if path_e & cyc_e:
            out.append("ordinary lollipop must share no edge")
    else:
        if not lp.path.edges or lp.path.edges[0] not in cyc_e:
            out.append("partial path must start with a cycle edge")
        if path_v & cyc_v:
            out.append("partial lollipop must share no vertex")
        if path_e & cyc_e != {lp.path.edges[0]}:
            out.append("partial lollipop must share exactly its first edge")
    return out


def _require_valid(lp: Lollipop) -> None:
    violations = check_lollipop(lp)
    if violations:
        raise InvalidLollipop("; ".join(violations))


def score(lp: Lollipop) -> LollipopScore:
    """The five-component score of a valid lollipop."""
    _require_valid(lp)
    h = lp.h
    off = lp.off_vertices
    cyc_e = set(lp.cycle.edges)
    cross = sum(len(h.edge_sets[e] & off) for e in lp.cycle.edges)
    contained = sum(1 for e in lp.path.edges
                    if e not in cyc_e and h.edge_sets[e] <= off)
    return LollipopScore(c_len=len(lp.cycle.vertices),
                         p_len=len(lp.path.edges),
                         cross=cross,
                         kind_rank=1 if lp.kind == "o" else 0,
                         contained=contained)


def reduced_edge_sets(lp: Lollipop) -> ReducedEdgeSets:
    """Edges outside cycle and path, and the variant readmitting f1 for
    ordinary lollipops."""
    all_ids = frozenset(range(lp.h.m))
    h_prime = all_ids - set(lp.cycle.edges) - set(lp.path.edges)
    if lp.kind == "o" and lp.path.edges:
        h_dprime = h_prime | {lp.path.edges[0]}
    else:
        h_dprime = h_prime
    return ReducedEdgeSets(h_prime=h_prime, h_dprime=h_dprime)


# ---------------------------------------------------------------------------
# segments of a cycle

@dataclass(frozen=True)
class CycleSegment:
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def _arc(cycle: BergeCycle, start: int, stop: int) -> CycleSegment:
    """Forward arc of cycle positions start..stop inclusive."""
    c = len(cycle.vertices)
    span = (stop - start) % c
    vs = tuple(cycle.vertices[(start + i) % c] for i in range(span + 1))
    es = tuple(cycle.edges[(start + i) % c] for i in range(span))
    return CycleSegment(vs, es)


def long_segment(cycle: BergeCycle, a: tuple[str, int],
                 b: tuple[str, int]) -> CycleSegment:
    """The longer of the two cycle arcs connecting two anchors.

    Anchors are ("vertex", position) or ("edge", position).  Arcs between
    edge anchors use neither anchor edge.  Guaranteed vertex counts:
    ceil(c/2) for edge-edge, ceil((c+1)/2) for edge-vertex and
    ceil((c+2)/2) for vertex-vertex anchors.
    """
    c = len(cycle.vertices)
    for anchor in (a, b):
        if (not isinstance(anchor, tuple) or len(anchor) != 2
                or anchor[0] not in ("vertex", "edge")
                or not 0 <= anchor[1] < c):
            raise AnchorNotOnCycle(f"bad anchor {anchor!r}")
    if a == b:
        raise AnchorNotOnCycle("anchors must differ")
    if a[0] == "vertex" and b[0] == "edge":
        a, b = b, a
    ka, ia = a
    kb, ib = b
    if ka == "edge" and kb == "edge":
        s1 = _arc(cycle, (ia + 1) % c, ib)
        s2 = _arc(cycle, (ib + 1) % c, ia)
    elif ka == "edge" and kb == "vertex":
        s1 = _arc(cycle, (ia + 1) % c, ib)
        s2 = _arc(cycle, ib, ia)
    else:
        s1 = _arc(cycle, ia, ib)
        s2 = _arc(cycle, ib, ia)
    return s1 if len(s1.vertices) >= len(s2.vertices) else s2


# ---------------------------------------------------------------------------
# the move catalog

def _empty_rooted(h: Hypergraph, cycle: BergeCycle) -> Lollipop:
    return Lollipop(h, cycle, BergePath(vertices=(cycle.vertices[0],),
                                        edges=()))


def _as_lollipop(h: Hypergraph, cycle: BergeCycle,
                 path) -> Lollipop | None:
    lp = Lollipop(h, cycle, path)
    return lp if not check_lollipop(lp) else None


def _path_indexing(lp: Lollipop):
    """Uniform view of the path: (vertices, edges, connector_offset).

    For ordinary paths edge i connects vertices i and i+1; for partial
    paths edge i+1 does (edge 0 is the cycle anchor holding vertex 0).
    """
    off = 0 if lp.kind == "o" else 1
    return lp.path.vertices, lp.path.edges, off


def _off_indices(lp: Lollipop) -> range:
    return range(1, len(lp.path.vertices)) if lp.kind == "o" \
        else range(len(lp.path.vertices))


def _move_extend(lp: Lollipop, base: LollipopScore) -> Lollipop | None:
    """M1: append an unused edge and a fresh vertex at the path tip."""
    h = lp.h
    blocked = set(lp.cycle.vertices) | set(lp.path.vertices)
    h_prime = reduced_edge_sets(lp).h_prime
    tip = lp.tip
    for e in sorted(h_prime):
        if tip not in h.edge_sets[e]:
            continue
        for y in sorted(h.edge_sets[e]):
            if y in blocked:
                continue
            if lp.kind == "o":
                path = BergePath(lp.path.vertices + (y,), lp.path.edges + (e,))
            else:
                path = PartialBergePath(lp.path.edges + (e,),
                                        lp.path.vertices + (y,))
            cand = _as_lollipop(h, lp.cycle, path)
            if cand is not None and score(cand) > base:
                return cand
    return None


def _splice_candidates(lp: Lollipop) -> Iterator[BergeCycle]:
    """M2 candidate cycles: reroute part of the path into the cycle."""
    h = lp.h
    cv, ce = lp.cycle.vertices, lp.cycle.edges
    c = len(cv)
    pv, pe, eoff = _path_indexing(lp)
    pos = {v: i for i, v in enumerate(cv)}
    cyc_v = set(cv)

    # tail splice: path prefix rejoins the cycle through edge g
    for g in range(h.m):
        gset = h.edge_sets[g]
        for midx in _off_indices(lp):
            if pv[midx] not in gset:
                continue
            targets = sorted(gset & cyc_v)
            if lp.kind == "o":
                root_pos = pos[pv[0]]
                for vi in targets:
                    if vi == pv[0]:
                        continue
                    for seg_start, seg_stop, forward in (
                            (root_pos, pos[vi], True),
                            (pos[vi], root_pos, False)):
                        seg = _arc(lp.cycle, seg_start, seg_stop)
                        svs, ses = seg.vertices, seg.edges
                        if not forward:
                            svs = tuple(reversed(svs))
                            ses = tuple(reversed(ses))
                        vs = svs + tuple(pv[midx - j] for j in range(midx))
                        es = ses + (g,) + tuple(pe[midx - 1 - j]
                                                for j in range(midx))
                        yield BergeCycle(vs, es)
            else:
                # prefix u2..u_m, then g to vi, an arc avoiding the anchor
                # edge, and the anchor edge itself closes back to u2
                t = ce.index(pe[0])
                prefix_vs = tuple(pv[:midx + 1])
                prefix_es = tuple(pe[1:midx + 1])
                for vi in targets:
                    p = pos[vi]
                    for forward in (True, False):
                        if forward:
                            seg = _arc(lp.cycle, p, t)
                            svs, ses = seg.vertices, seg.edges
                        else:
                            seg = _arc(lp.cycle, (t + 1) % c, p)
                            svs = tuple(reversed(seg.vertices))
                            ses = tuple(reversed(seg.edges))
                        vs = prefix_vs + svs
                        es = prefix_es + (g,) + ses + (pe[0],)
                        yield BergeCycle(vs, es)

    # insertion splice: hang a path block between consecutive cycle vertices
    off_idx = list(_off_indices(lp))
    for i in range(c):
        anchor = h.edge_sets[ce[i]]
        for jdx in off_idx:
            if pv[jdx] not in anchor:
                continue
            for mdx in off_idx:
                lo, hi = min(jdx, mdx), max(jdx, mdx)
                sub_vs = pv[lo:hi + 1]
                sub_es = pe[lo + eoff:hi + eoff]
                if jdx > mdx:
                    sub_vs = tuple(reversed(sub_vs))
                    sub_es = tuple(reversed(sub_es))
                for g in range(h.m):
                    gset = h.edge_sets[g]
                    if pv[mdx] not in gset:
                        continue
                    if cv[(i + 1) % c] in gset:
                        vs = _arc(lp.cycle, (i + 1) % c, i).vertices \
                            + tuple(sub_vs)
                        es = _arc(lp.cycle, (i + 1) % c, i).edges \
                            + (ce[i],) + tuple(sub_es) + (g,)
                        yield BergeCycle(vs, es)
                    if cv[i] in gset:
                        rev = _arc(lp.cycle, (i + 1) % c, i)
                        vs = tuple(reversed(rev.vertices)) + tuple(sub_vs)
                        es = tuple(reversed(rev.edges)) + (ce[i],) \
                            + tuple(sub_es) + (g,)
                        yield BergeCycle(vs, es)


def _move_splice(lp: Lollipop, base: LollipopScore) -> Lollipop | None:
    """M2: any rewiring that yields a strictly longer cycle."""
    h = lp.h
    c = len(lp.cycle.vertices)
    for cand in _splice_candidates(lp):
        if len(cand.vertices) <= c:
            continue
        if validate_cycle(h, cand):
            continue
        out = _empty_rooted(h, cand)
        if score(out) > base:
            return out
    return None


def _move_swap(lp: Lollipop, base: LollipopScore) -> Lollipop | None:
    """M3: swap one cycle edge (raises cross) or one path edge (raises
    contained) for an equal-role edge."""
    h = lp.h
    cv, ce = lp.cycle.vertices, lp.cycle.edges
    c = len(cv)
    sets = reduced_edge_sets(lp)
    cyc_e = set(ce)

    for g in sorted(sets.h_dprime):
        gset = h.edge_sets[g]
        for i in range(c):
            if g in cyc_e or not {cv[i], cv[(i + 1) % c]} <= gset:
                continue
            new_edges = ce[:i] + (g,) + ce[i + 1:]
            new_cycle = BergeCycle(cv, new_edges)
            if lp.kind == "o" and lp.path.edges and g == lp.path.edges[0]:
                path = PartialBergePath(lp.path.edges, lp.path.vertices[1:])
            else:
                path = lp.path
            cand = _as_lollipop(h, new_cycle, path)
            if cand is not None and score(cand) > base:
                return cand

    pv, pe, eoff = _path_indexing(lp)
    off = lp.off_vertices
    tip = lp.tip
    for g in sorted(sets.h_prime):
        gset = h.edge_sets[g]
        if tip not in gset:
            continue
        if not (off <= gset or gset <= off):
            continue
        last = len(pv) - 1
        for cut in range(last - 1):
            if pv[cut] not in gset:
                continue
            vs = pv[:cut + 1] + (pv[last],) + tuple(reversed(pv[cut + 1:last]))
            keep = pe[:cut + eoff]
            tail = tuple(reversed(pe[cut + 1 + eoff:]))
            es = keep + (g,) + tail
            path = BergePath(vs, es) if lp.kind == "o" \
                else PartialBergePath(es, vs)
            cand = _as_lollipop(h, lp.cycle, path)
            if cand is not None and score(cand) > base:
                return cand
    return None


def _rewired_variants(lp: Lollipop) -> Iterator[Lollipop]:
    """M4 pre-step: reverse the path suffix through an edge containing the
    tip; the score is unchanged."""
    h = lp.h
    pv, pe, eoff = _path_indexing(lp)
    tip = lp.tip
    last = len(pv) - 1
    for cut in range(last - 1):
        connector = pe[cut + eoff]
        if tip not in h.edge_sets[connector]:
            continue
        vs = pv[:cut + 1] + (pv[last],) + tuple(reversed(pv[cut + 1:last]))
        es = pe[:cut + eoff] + (connector,) \
            + tuple(reversed(pe[cut + 1 + eoff:]))
        path = BergePath(vs, es) if lp.kind == "o" else PartialBergePath(es, vs)
        cand = _as_lollipop(h, lp.cycle, path)
        if cand is not None:
            yield cand


def _move_reverse_then_improve(lp: Lollipop,
                               base: LollipopScore) -> Lollipop | None:
    """M4: a suffix reversal counts only when it unlocks M1-M3."""
    for variant in _rewired_variants(lp):
        for move in (_move_extend, _move_splice, _move_swap):
            out = move(variant, base)
            if out is not None and score(out) > base:
                return out
    return None


def _move_upgrade(lp: Lollipop, base: LollipopScore) -> Lollipop | None:
    """M5: re-root a partial path at a cycle vertex, making it ordinary."""
    if lp.kind != "p":
        return None
    h = lp.h
    h_prime = reduced_edge_sets(lp).h_prime
    first = lp.path.vertices[0]
    cyc_v = set(lp.cycle.vertices)
    for g in sorted(h_prime):
        gset = h.edge_sets[g]
        if first not in gset:
            continue
        for w in sorted(gset & cyc_v):
            path = BergePath((w,) + lp.path.vertices, (g,) + lp.path.edges[1:])
            cand = _as_lollipop(h, lp.cycle, path)
            if cand is not None and score(cand) > base:
                return cand
    return None


_CATALOG = (_move_extend, _move_splice, _move_swap,
            _move_reverse_then_improve, _move_upgrade)


def improve(lp: Lollipop) -> Lollipop | None:
    """First catalog move that strictly raises the score; None at a fixpoint.

    Every emitted lollipop passes its structural invariants and scores
    strictly above the input.
    """
    base = score(lp)  # also validates
    for move in _CATALOG:
        out = move(lp, base)
        if out is not None:
            assert score(out) > base
            return out
    return None


# ---------------------------------------------------------------------------
# heuristic growth

def _seed_cycle(h: Hypergraph) -> BergeCycle | None:
    """Smallest-id pair of edges sharing two vertices, as a length-2 cycle."""
    for i in range(h.m):
        for j in range(i + 1, h.m):
            shared = sorted(h.edge_sets[i] & h.edge_sets[j])
            if len(shared) >= 2:
                return BergeCycle((shared[0], shared[1]), (i, j))
    return None


def _seed_lollipops(h: Hypergraph, cycle: BergeCycle) -> Iterator[Lollipop]:
    cyc_v = set(cycle.vertices)
    for root in cycle.vertices:
        yield Lollipop(h, cycle, BergePath((root,), ()))
    for f in cycle.edges:
        for u in sorted(h.edge_sets[f] - cyc_v):
            lp = _as_lollipop(h, cycle, PartialBergePath((f,), (u,)))
            if lp is not None:
                yield lp


def grow_long_cycle(h: Hypergraph, seed: BergeCycle | None = None,
                    max_moves: int = 100_000,
                    stats: dict | None = None) -> BergeCycle:
    """Iterate improvement moves to a fixpoint and return the final cycle.

    Heuristic only: the result length never exceeds the true circumference.
    Requires a 2-connected input.
    """
    if not is_two_connected(h):
        raise NotTwoConnected("incidence graph is not 2-connected")
    if seed is not None:
        violations = validate_cycle(h, seed)
        if violations:
            raise InvalidLollipop("; ".join(violations))
        cycle = seed
    else:
        found = _seed_cycle(h)
        if found is None:
            raise NoCycle("no two edges share two vertices")
        cycle = found

    moves = 0
    cap = min(h.n, h.m)
    progress = True
    while progress and len(cycle.vertices) < cap and moves < max_moves:
        progress = False
        for lp in _seed_lollipops(h, cycle):
            cur = lp
            while moves < max_moves:
                nxt = improve(cur)
                if nxt is None:
                    break
                moves += 1
                cur = nxt
                if len(cur.cycle.vertices) > len(cycle.vertices):
                    cycle = cur.cycle
                    progress = True
                    break
            if progress:
                break
    if stats is not None:
        stats["moves"] = moves
    assert not validate_cycle(h, cycle)
    return cycle


# ---------------------------------------------------------------------------
# aligned disjoint paths in a 2-connected graph

def _aligned_paths(g: Graph, start: int, target: int, banned: frozenset[int],
                   position: dict[int, int]) -> Iterator[list[int]]:
    """DFS over simple start->target paths whose marked vertices appear in
    increasing position order."""

    def rec(node: int, lastpos: int, visited: list[int]):
        if node == target:
            yield list(visited)
            return
        for nxt in sorted(g.adj[node]):
            if nxt in banned or nxt in visited:
                continue
            npos = position.get(nxt)
            if npos is not None and npos <= lastpos:
                continue
            visited.append(nxt)
            yield from rec(nxt, npos if npos is not None else lastpos, visited)
            visited.pop()

    start_pos = position.get(start, -1)
    yield from rec(start, start_pos, [start])


def aligned_disjoint_paths(g: Graph, path: Sequence[int],
                           z: int) -> tuple[list[int], list[int]]:
    """Two paths from the origin of ``path``: one to ``z``, one to its end,
    sharing only the origin, both order-preserving on shared path vertices.

    Existence is guaranteed for 2-connected graphs; the output postconditions
    are machine-checked before returning.
    """
    if not is_two_connected_graph(g):
        raise NotTwoConnected("graph is not 2-connected")
    path = list(path)
    if len(path) < 2 or len(set(path)) != len(path):
        raise NodeNotOnPath("invalid base path")
    for a, b in zip(path, path[1:]):
        if b not in g.adj[a]:
            raise NodeNotOnPath(f"{a}-{b} is not an edge")
    if z not in path:
        raise NodeNotOnPath(f"{z} not on path")
    if z == path[-1]:
        # both outputs would end at z, forcing a second shared node
        raise NodeNotOnPath("target must precede the path end")
    x, y = path[0], path[-1]
    position = {v: i for i, v in enumerate(path)}

    for p1 in _aligned_paths(g, x, z, frozenset(), position):
        banned = frozenset(p1) - {x}
        for p2 in _aligned_paths(g, x, y, banned, position):
            _check_aligned_pair(path, z, p1, p2)
            return p1, p2
    raise NotTwoConnected("no aligned disjoint pair found")  # unreachable


def _check_aligned_pair(path: Sequence[int], z: int,
                        p1: Sequence[int], p2: Sequence[int]) -> None:
    x, y = path[0], path[-1]
    assert p1[0] == x and p1[-1] == z
    assert p2[0] == x and p2[-1] == y
    assert set(p1) & set(p2) == {x}
    position = {v: i for i, v in enumerate(path)}
    for q in (p1, p2):
        marks = [position[v] for v in q if v in position]
        assert marks == sorted(marks)


# ---------------------------------------------------------------------------
# independent sets on a path avoiding marked edges

def independent_set_bound(s: int, b: int) -> int:
    """Maximum size of an independent set among the s interior vertices of a
    path that avoids b protected edges: ceil((s - b) / 2)."""
    if s < 0 or b < 0 or b > s + 1:
        raise BadRange(f"need s+1 >= b >= 0, got s={s} b={b}")
    return math.ceil((s - b) / 2)


def independent_sets_on_path(s: int, forbidden_edges: frozenset[int]
                             ) -> Iterator[frozenset[int]]:
    """All nonempty independent subsets of {1..s} on the path v0..v(s+1)
    avoiding every endpoint of the given edges (edge i joins v_i, v_{i+1}).

    Brute-force companion used to cross-check the closed-form bound.
    """
    blocked = set()
    for i in forbidden_edges:
        blocked.add(i)
        blocked.add(i + 1)
    free = [v for v in range(1, s + 1) if v not in blocked]
    for mask in range(1, 1 << len(free)):
        chosen = [free[i] for i in range(len(free)) if mask >> i & 1]
        if all(b - a >= 2 for a, b in zip(chosen, chosen[1:])):
            yield frozenset(chosen)


def equality_condition_holds(s: int, forbidden_edges: frozenset[int],
                             chosen: frozenset[int]) -> bool:
    """Tightness structure: every interior index is in the set, flanked by a
    protected edge, or surrounded by chosen neighbors."""
    for i in range(1, s + 1):
        if i in chosen or i in forbidden_edges or i - 1 in forbidden_edges:
            continue
        if not (i - 1 in chosen and i + 1 in chosen):
            return False
    return True
