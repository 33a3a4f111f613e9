"""Facet counting for the symmetric edge polytope of a connected graph.

Three independent routes are implemented and cross-checked by the test
harness:

* enumerate_facets_oracle walks integer vertex labelings directly. A facet
  corresponds to a labeling f with f fixed to 0 at vertex 0, |f(i)-f(j)| <= 1
  on every edge, and the set of edges where the difference is exactly 1
  forming a spanning connected subgraph. Differences are enumerated on a
  spanning tree (3^(n-1) candidates) instead of raw values.

* count_facets sums multiplicities over facet subgraphs: the unordered
  bipartitions (V1, V2) whose crossing edges form a spanning connected
  subgraph. Each such cut contributes the facet count of the bipartite
  quotient obtained by contracting all non-crossing edges.

* count_suspension_via_domination counts facets of the suspension of a base
  graph by scanning dominating sets S of the base: each contributes
  2^(number of components induced on S).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .graphs import (
    Edge,
    Graph,
    GraphError,
    Mask,
    bipartition,
    bit,
    component_count_within,
    contract_edges,
    edges,
    full_mask,
    is_connected,
    iter_bits,
    reach,
)


@dataclass(frozen=True)
class FacetFunction:
    """Normalized facet-defining labeling: values[0] == 0."""

    values: tuple[int, ...]

    def strict_edges(self, g: Graph) -> list[Edge]:
        """Edges of g where the labels differ (always by exactly 1)."""
        return [(i, j) for i, j in edges(g) if self.values[i] != self.values[j]]


@dataclass(frozen=True)
class FacetSubgraph:
    """A spanning connected cut of the source graph, with multiplicity.

    part1 holds vertex 0; cross_edges are all source edges between the parts;
    mu is the number of facets whose strict edge set is exactly this cut.
    """

    part1: Mask
    part2: Mask
    cross_edges: tuple[Edge, ...]
    mu: int


def _require_connected(g: Graph) -> None:
    if g.n < 2 or not is_connected(g):
        raise GraphError("facet counting requires a connected graph on >= 2 vertices")


def _bfs_tree(g: Graph) -> list[Edge]:
    """Spanning tree edges as (parent, child), parents discovered first."""
    seen = 1
    order = [0]
    tree = []
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for w in iter_bits(g.adj[u] & ~seen):
            seen |= bit(w)
            order.append(w)
            tree.append((u, w))
    return tree


def enumerate_facets_oracle(g: Graph) -> list[FacetFunction]:
    """All facet-defining labelings, sorted by value vector.

    Each spanning-tree edge gets a difference in {-1, 0, +1}; the root value
    is 0, so every labeling satisfying the edge condition appears exactly
    once. Candidates are kept when every non-tree edge differs by at most 1
    and the strict edges span and connect the graph.
    """
    _require_connected(g)
    n = g.n
    tree = _bfs_tree(g)
    tree_set = {(min(e), max(e)) for e in tree}
    rest = [e for e in edges(g) if e not in tree_set]
    all_edges = edges(g)
    full = full_mask(n)

    found = set()
    values = [0] * n
    for diffs in product((-1, 0, 1), repeat=n - 1):
        for (p, c), d in zip(tree, diffs):
            values[c] = values[p] + d
        ok = True
        for i, j in rest:
            if abs(values[i] - values[j]) > 1:
                ok = False
                break
        if not ok:
            continue
        rows = [0] * n
        for i, j in all_edges:
            if values[i] != values[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        if reach(rows, 1, full) == full:
            found.add(tuple(values))
    return [FacetFunction(v) for v in sorted(found)]


def _cross_rows(g: Graph, part2: Mask) -> list[Mask]:
    """Adjacency restricted to edges crossing the (complement, part2) cut."""
    rows = []
    for v in range(g.n):
        if part2 >> v & 1:
            rows.append(g.adj[v] & ~part2)
        else:
            rows.append(g.adj[v] & part2)
    return rows


def _quotient_count(g: Graph, part2: Mask) -> int:
    """Facet multiplicity of the cut: contract non-crossing edges, count strict."""
    non_cross = []
    for i, j in edges(g):
        if (part2 >> i & 1) == (part2 >> j & 1):
            non_cross.append((i, j))
    quotient = contract_edges(g, non_cross)
    return count_bipartite_strict(quotient)


def enumerate_facet_subgraphs(g: Graph) -> list[FacetSubgraph]:
    """All cuts whose crossing edges form a spanning connected subgraph.

    These are exactly the maximal connected spanning bipartite subgraphs.
    Bipartitions are scanned with vertex 0 pinned to part1, so each
    unordered cut appears once; output order follows the part2 bitmask.
    """
    _require_connected(g)
    n = g.n
    full = full_mask(n)
    out = []
    for half in range(1, 1 << (n - 1)):
        part2 = half << 1
        rows = _cross_rows(g, part2)
        if reach(rows, 1, full) != full:
            continue
        cross = tuple(
            (i, j) for i, j in edges(g) if (part2 >> i & 1) != (part2 >> j & 1)
        )
        mu = _quotient_count(g, part2)
        out.append(FacetSubgraph(full ^ part2, part2, cross, mu))
    return out


def mu_of(g: Graph, h: FacetSubgraph) -> int:
    """Number of facets sharing the cut h, recomputed from g."""
    full = full_mask(g.n)
    if h.part1 & h.part2 or (h.part1 | h.part2) != full or not h.part1 & 1:
        raise GraphError("facet subgraph does not partition this graph")
    expected = tuple(
        (i, j) for i, j in edges(g) if (h.part2 >> i & 1) != (h.part2 >> j & 1)
    )
    if expected != h.cross_edges:
        raise GraphError("facet subgraph was not produced from this graph")
    rows = _cross_rows(g, h.part2)
    if reach(rows, 1, full) != full:
        raise GraphError("cut is not spanning connected in this graph")
    return _quotient_count(g, h.part2)


def count_facets(g: Graph) -> int:
    """Facet count via the cut decomposition (sum of multiplicities)."""
    _require_connected(g)
    n = g.n
    full = full_mask(n)
    total = 0
    for half in range(1, 1 << (n - 1)):
        part2 = half << 1
        rows = _cross_rows(g, part2)
        if reach(rows, 1, full) == full:
            total += _quotient_count(g, part2)
    return total


def count_bipartite_strict(b: Graph) -> int:
    """Labelings of a connected bipartite graph that are strict on every edge.

    Signs are chosen on a spanning tree (2^(n-1) candidates); a candidate
    survives when every non-tree edge also differs by exactly 1. For a
    bipartite graph this equals its facet count.
    """
    if b.n < 2 or not is_connected(b):
        raise GraphError("strict counting requires a connected graph on >= 2 vertices")
    if bipartition(b) is None:
        raise GraphError("strict counting requires a bipartite graph")
    n = b.n
    tree = _bfs_tree(b)
    tree_set = {(min(e), max(e)) for e in tree}
    rest = [e for e in edges(b) if e not in tree_set]

    count = 0
    values = [0] * n
    for signs in product((-1, 1), repeat=n - 1):
        for (p, c), d in zip(tree, signs):
            values[c] = values[p] + d
        ok = True
        for i, j in rest:
            if abs(values[i] - values[j]) != 1:
                ok = False
                break
        if ok:
            count += 1
    return count


def count_suspension_via_domination(g: Graph) -> int:
    """Facet count of the suspension of g, summed over dominating sets of g."""
    n = g.n
    full = full_mask(n)
    closed = [g.adj[v] | bit(v) for v in range(n)]
    total = 0
    for s in range(1, 1 << n):
        cover = 0
        m = s
        while m:
            low = m & -m
            cover |= closed[low.bit_length() - 1]
            m ^= low
        if cover == full:
            total += 1 << component_count_within(g, s)
    return total


def subgraph_component_value(g: Graph) -> int:
    """Sum of 2^(components induced on S) over all vertex subsets S.

    The empty subset contributes 1. This upper-bounds the facet count of
    the suspension of g, since dominating sets are a subfamily.
    """
    total = 0
    for s in range(1 << g.n):
        total += 1 << component_count_within(g, s)
    return total
