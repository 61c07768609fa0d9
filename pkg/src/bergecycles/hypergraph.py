"""Core r-uniform hypergraph representation.

Vertices are dense integer ids 0..n-1.  Edges are stored as sorted vertex
tuples; edge ids are positions in the edge list.  A hypergraph is immutable
after construction and safe to share between workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DuplicateEdge, NonUniformEdge, ParseError, VertexOutOfRange


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices 0..n-1.

    Invariants (enforced by :func:`build`):
      * every edge has exactly ``r`` distinct vertices, each in range;
      * no two edges have the same vertex set;
      * ``r >= 2`` and ``n >= r``.
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]
    # optional original vertex labels, index -> label (set by the loader)
    labels: tuple | None = field(default=None, compare=False)

    @cached_property
    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(e) for e in self.edges)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the ids of edges containing it (ascending)."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, e in enumerate(self.edges):
            for v in e:
                inc[v].append(eid)
        return tuple(tuple(lst) for lst in inc)

    @property
    def m(self) -> int:
        return len(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or v < 0 or v >= self.n:
            raise VertexOutOfRange(v, self.n)

    def degree(self, v: int) -> int:
        """Number of edges containing ``v``."""
        self._check_vertex(v)
        return len(self.incident[v])

    def min_degree(self) -> int:
        """Minimum over all vertex degrees (0 for isolated vertices)."""
        return min(len(self.incident[v]) for v in range(self.n))

    def neighborhood(self, v: int) -> frozenset[int]:
        """Vertices co-occurring with ``v`` in some edge; never contains ``v``."""
        self._check_vertex(v)
        out: set[int] = set()
        for eid in self.incident[v]:
            out.update(self.edges[eid])
        out.discard(v)
        return frozenset(out)

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.neighborhood(v) | {v}

    def incidence_graph(self) -> IncidenceGraph:
        """Bipartite containment graph over vertex-nodes and edge-nodes."""
        return IncidenceGraph(left=self.n, right=self.m, adjacency=self.edge_sets)

    # -- serialization: the interchange format for every CLI subcommand --

    def to_document(self) -> dict:
        doc = {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}
        if self.labels is not None:
            doc["labels"] = list(self.labels)
        return doc

    def to_text(self) -> str:
        return json.dumps(self.to_document(), indent=1) + "\n"


@dataclass(frozen=True)
class IncidenceGraph:
    """Incidence bipartite graph: vertex-nodes 0..left-1, edge-nodes follow.

    ``adjacency[j]`` holds the vertex-nodes incident to edge-node ``j``; every
    edge-node has graph-degree exactly r.
    """

    left: int
    right: int
    adjacency: tuple[frozenset[int], ...]

    @property
    def node_count(self) -> int:
        return self.left + self.right

    def is_vertex_node(self, node: int) -> bool:
        return 0 <= node < self.left

    def node_label(self, node: int) -> tuple[str, int]:
        if self.is_vertex_node(node):
            return ("vertex", node)
        return ("edge", node - self.left)

    def neighbors(self) -> tuple[frozenset[int], ...]:
        """Adjacency sets over the combined node numbering."""
        adj: list[set[int]] = [set() for _ in range(self.node_count)]
        for j, verts in enumerate(self.adjacency):
            jn = self.left + j
            for v in verts:
                adj[v].add(jn)
                adj[jn].add(v)
        return tuple(frozenset(s) for s in adj)

    def graph_degree(self, node: int) -> int:
        if self.is_vertex_node(node):
            return sum(1 for verts in self.adjacency if node in verts)
        return len(self.adjacency[node - self.left])


def build(n: int, r: int, edges: Iterable[Iterable[int]],
          labels: Sequence | None = None) -> Hypergraph:
    """Validate and construct a hypergraph.

    Edge ids equal input positions.  Raises :class:`NonUniformEdge`,
    :class:`DuplicateEdge` or :class:`VertexOutOfRange` naming the offending
    edge id.
    """
    if r < 2:
        raise NonUniformEdge(-1, r, 2)
    if n < r:
        raise VertexOutOfRange(n, n)
    normalized: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for eid, raw in enumerate(edges):
        vs = sorted(set(raw))
        if len(vs) != r:
            raise NonUniformEdge(eid, len(vs), r)
        for v in vs:
            if not isinstance(v, int) or v < 0 or v >= n:
                raise VertexOutOfRange(v, n, edge_id=eid)
        key = tuple(vs)
        if key in seen:
            raise DuplicateEdge(eid, seen[key])
        seen[key] = eid
        normalized.append(key)
    return Hypergraph(n=n, r=r, edges=tuple(normalized),
                      labels=tuple(labels) if labels is not None else None)


def from_document(doc: dict) -> Hypergraph:
    """Build a hypergraph from a parsed interchange document.

    Vertices may carry arbitrary labels; non-dense labelings are remapped to
    dense ids (sorted by label) and the mapping is recorded on the result.
    """
    if not isinstance(doc, dict):
        raise ParseError("document must be an object")
    for fieldname in ("n", "r", "edges"):
        if fieldname not in doc:
            raise ParseError(f"missing field '{fieldname}'")
    n, r, edges = doc["n"], doc["r"], doc["edges"]
    if not isinstance(n, int) or not isinstance(r, int):
        raise ParseError("fields 'n' and 'r' must be integers")
    if not isinstance(edges, list):
        raise ParseError("field 'edges' must be an array")
    used = set()
    for i, e in enumerate(edges):
        if not isinstance(e, list):
            raise ParseError(f"edge {i} is not an array")
        used.update(e)
    dense = all(isinstance(v, int) and 0 <= v < n for v in used)
    labels = doc.get("labels")
    if dense:
        mapping = None
    else:
        if len(used) > n:
            raise ParseError(f"{len(used)} distinct vertex labels exceed n={n}")
        ordered = sorted(used, key=repr)
        mapping = {lab: i for i, lab in enumerate(ordered)}
        labels = ordered
        edges = [[mapping[v] for v in e] for e in edges]
    try:
        return build(n, r, edges, labels=labels)
    except NonUniformEdge as exc:
        raise ParseError(f"edge {exc.edge_id}: wrong arity ({exc})") from exc
    except DuplicateEdge as exc:
        raise ParseError(f"edge {exc.edge_id}: duplicate of edge "
                         f"{exc.first_id}") from exc
    except VertexOutOfRange as exc:
        raise ParseError(f"edge {exc.edge_id}: vertex out of range "
                         f"({exc})") from exc


def from_text(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: {exc.msg}") from exc
    return from_document(doc)


def load(path) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return from_text(fh.read())


def save(h: Hypergraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(h.to_text())
