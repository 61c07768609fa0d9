"""Generators for the extremal sharpness families and test fixtures.

Three families realize the tight degree threshold:

  * ``shared_pair_cliques``: q cliques of k-2 vertices glued along a common
    hub pair {x, y}; every Berge cycle meets at most two cliques, so its
    length is at most 2k-2.
  * ``bounded_core``: a core of k-1 vertices plus all edges touching at most
    one outside vertex; no cycle can use two consecutive outside vertices.
  * ``two_hub_blocks``: s blocks of r-1 vertices, each paired with two hub
    vertices; no Berge cycle is longer than 4.

All generators validate parameters, produce deterministic edge orders and
return hypergraphs that pass :func:`bergecycles.hypergraph.build` validation.
"""

from __future__ import annotations

import warnings
from itertools import combinations

from .errors import BadParams
from .hypergraph import Hypergraph, build


def shared_pair_cliques(k: int, r: int, q: int) -> Hypergraph:
    """q blocks of k-2 vertices, each inducing a clique with hubs x=0, y=1.

    n = q(k-2)+2.  Requires k >= r+2 and q >= 2; with q = 2 the instance is
    only non-strictly sharp (n itself equals 2k-2), which triggers a warning.
    """
    if r < 3 or k < r + 2 or q < 2:
        raise BadParams(f"need k >= r+2 >= 5 and q >= 2, got k={k} r={r} q={q}")
    if q == 2:
        warnings.warn("q=2 gives n = 2k-2: the cycle bound is met with "
                      "equality by n, not strictly", stacklevel=2)
    n = q * (k - 2) + 2
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for i in range(q):
        lo = 2 + i * (k - 2)
        block = (0, 1) + tuple(range(lo, lo + (k - 2)))
        for combo in combinations(block, r):
            key = tuple(sorted(combo))
            if key not in seen:  # r >= 3 makes cross-block duplicates impossible
                seen.add(key)
                edges.append(key)
    return build(n, r, edges)


def bounded_core(k: int, r: int, n: int) -> Hypergraph:
    """Core X = {0..k-2}; edges are all r-sets with at most one vertex outside.

    Requires n >= k >= r+2.
    """
    if r < 3 or k < r + 2 or n < k:
        raise BadParams(f"need n >= k >= r+2 >= 5, got n={n} k={k} r={r}")
    core = range(k - 1)
    edges: list[tuple[int, ...]] = [tuple(c) for c in combinations(core, r)]
    for y in range(k - 1, n):
        for c in combinations(core, r - 1):
            edges.append(tuple(sorted(c + (y,))))
    return build(n, r, edges)


def two_hub_blocks(r: int, s: int) -> Hypergraph:
    """Hubs 0 and 1; s blocks of r-1 vertices, each joined to both hubs.

    n = 2 + s(r-1), 2s edges.  Requires r >= 3 and s >= 2.
    """
    if r < 3 or s < 2:
        raise BadParams(f"need r >= 3 and s >= 2, got r={r} s={s}")
    n = 2 + s * (r - 1)
    edges: list[tuple[int, ...]] = []
    for i in range(s):
        lo = 2 + i * (r - 1)
        block = tuple(range(lo, lo + (r - 1)))
        for hub in (0, 1):
            edges.append(tuple(sorted(block + (hub,))))
    return build(n, r, edges)


def complete_runiform(n: int, r: int) -> Hypergraph:
    """All binom(n, r) edges."""
    if r < 2 or n < r:
        raise BadParams(f"need n >= r >= 2, got n={n} r={r}")
    return build(n, r, [tuple(c) for c in combinations(range(n), r)])


FAMILIES = {
    "cliques": shared_pair_cliques,
    "core": bounded_core,
    "hubs": two_hub_blocks,
    "complete": complete_runiform,
}
