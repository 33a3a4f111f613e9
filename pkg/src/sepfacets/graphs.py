"""Simple undirected graphs on 0..n-1 with bitmask vertex sets.

A vertex set is a plain int used as a bitmask, so the hot loops of the
counting routines (cut enumeration, flood fills, dominating-set scans) are
single word operations for n <= 64. Graphs are immutable values; every
operation returns a fresh Graph and validates the invariants on the way in.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .limits import max_vertices

Mask = int
Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or operation input."""


def full_mask(n: int) -> Mask:
    return (1 << n) - 1


def bit(v: int) -> Mask:
    return 1 << v


def iter_bits(mask: Mask) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> Mask:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: adj[i] is the open-neighborhood bitmask of i."""

    n: int
    adj: tuple[Mask, ...]

    def __post_init__(self) -> None:
        cap = max_vertices()
        if not 1 <= self.n <= cap:
            raise GraphError(f"vertex count {self.n} outside [1, {cap}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match n")
        full = full_mask(self.n)
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"adjacency row {i} has bits >= n")
            if row >> i & 1:
                raise GraphError(f"loop at vertex {i}")
        for i, row in enumerate(self.adj):
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise GraphError(f"asymmetric edge ({i},{j})")

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph({self.n}, {sorted(edges(self))})"


def from_edges(n: int, edge_list: Iterable[Edge]) -> Graph:
    """Build a graph from (possibly repeated) unordered vertex pairs."""
    cap = max_vertices()
    if not 1 <= n <= cap:
        raise GraphError(f"vertex count {n} outside [1, {cap}]")
    rows = [0] * n
    for i, j in edge_list:
        if i == j:
            raise GraphError(f"loop edge ({i},{j})")
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i},{j}) out of range for n={n}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def edges(g: Graph) -> list[Edge]:
    """All edges as sorted (i, j) pairs with i < j."""
    out = []
    for i in range(g.n):
        for j in iter_bits(g.adj[i] >> (i + 1)):
            out.append((i, i + 1 + j))
    return out


def edge_count(g: Graph) -> int:
    return sum(row.bit_count() for row in g.adj) // 2


def has_edge(g: Graph, i: int, j: int) -> bool:
    return bool(g.adj[i] >> j & 1)


def degree(g: Graph, v: int) -> int:
    return g.adj[v].bit_count()


def neighborhood(g: Graph, v: int) -> Mask:
    return g.adj[v]


def closed_neighborhood(g: Graph, v: int) -> Mask:
    return g.adj[v] | bit(v)


def reach(adj: tuple[Mask, ...] | list[Mask], start: Mask, allowed: Mask) -> Mask:
    """Vertices reachable from the start mask while staying inside allowed."""
    seen = start & allowed
    frontier = seen
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= adj[v]
        frontier = grow & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[Mask]:
    """Connected components as bitmasks, ordered by smallest member."""
    out = []
    remaining = full_mask(g.n)
    while remaining:
        seed = remaining & -remaining
        comp = reach(g.adj, seed, remaining)
        out.append(comp)
        remaining &= ~comp
    return out


def component_count(g: Graph) -> int:
    return len(components(g))


def component_count_within(g: Graph, mask: Mask) -> int:
    """Number of connected components of the induced subgraph on mask (0 for empty)."""
    count = 0
    remaining = mask
    while remaining:
        seed = remaining & -remaining
        comp = reach(g.adj, seed, remaining)
        count += 1
        remaining &= ~comp
    return count


def is_connected(g: Graph) -> bool:
    return reach(g.adj, 1, full_mask(g.n)) == full_mask(g.n)


def bipartition(g: Graph) -> tuple[Mask, Mask] | None:
    """Proper 2-coloring (part0, part1) or None; each component's smallest
    vertex lands in part0, so vertex 0 is always in the first part."""
    part0 = 0
    part1 = 0
    done = 0
    full = full_mask(g.n)
    while done != full:
        seed_bit = (full & ~done) & -(full & ~done)
        layer = seed_bit
        seen = layer
        color = 0
        while layer:
            if color == 0:
                part0 |= layer
            else:
                part1 |= layer
            grow = 0
            for v in iter_bits(layer):
                grow |= g.adj[v]
            layer = grow & ~seen
            seen |= layer
            color ^= 1
        done |= seen
    for v in iter_bits(part0):
        if g.adj[v] & part0:
            return None
    for v in iter_bits(part1):
        if g.adj[v] & part1:
            return None
    return part0, part1


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def induced(g: Graph, s: Mask) -> Graph:
    """Induced subgraph on s, relabeled 0..|s|-1 in ascending vertex order."""
    if s == 0:
        raise GraphError("induced subgraph on the empty set is not defined")
    if s & ~full_mask(g.n):
        raise GraphError("vertex set has bits outside the graph")
    old = list(iter_bits(s))
    index = {v: k for k, v in enumerate(old)}
    rows = []
    for v in old:
        row = 0
        for w in iter_bits(g.adj[v] & s):
            row |= 1 << index[w]
        rows.append(row)
    return Graph(len(old), tuple(rows))


def contract_edges(g: Graph, contract: Iterable[Edge]) -> Graph:
    """Contract the given edges and simplify (no loops, no multi-edges).

    New vertices are the components of (V, contract), numbered by ascending
    smallest original vertex, which keeps results deterministic.
    """
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in contract:
        if not (0 <= i < g.n and 0 <= j < g.n) or not has_edge(g, i, j):
            raise GraphError(f"({i},{j}) is not an edge of the graph")
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    roots = sorted({find(v) for v in range(g.n)})
    index = {r: k for k, r in enumerate(roots)}
    rows = [0] * len(roots)
    for i, j in edges(g):
        a, b = index[find(i)], index[find(j)]
        if a != b:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    return Graph(len(roots), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    if g.n < 2:
        raise GraphError("cannot delete the last vertex")
    _check_vertex(g, v)
    return induced(g, full_mask(g.n) ^ bit(v))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    _check_vertex(g, v)
    rest = full_mask(g.n) ^ closed_neighborhood(g, v)
    if rest == 0:
        raise GraphError(f"closed neighborhood of {v} covers the graph")
    return induced(g, rest)


def contract_vertex(g: Graph, v: int) -> Graph:
    """Remove v and add a clique on its former neighbors."""
    if g.n < 2:
        raise GraphError("cannot contract the last vertex")
    _check_vertex(g, v)
    keep = list(iter_bits(full_mask(g.n) ^ bit(v)))
    index = {w: k for k, w in enumerate(keep)}
    rows = [0] * len(keep)
    for i, j in edges(g):
        if i != v and j != v:
            a, b = index[i], index[j]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
    nbrs = [index[w] for w in iter_bits(g.adj[v])]
    for a in nbrs:
        for b in nbrs:
            if a != b:
                rows[a] |= 1 << b
    return Graph(len(keep), tuple(rows))


def delete_edge(g: Graph, i: int, j: int) -> Graph:
    if not has_edge(g, i, j):
        raise GraphError(f"({i},{j}) is not an edge of the graph")
    rows = list(g.adj)
    rows[i] &= ~bit(j)
    rows[j] &= ~bit(i)
    return Graph(g.n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = full_mask(g.n)
    rows = tuple((full ^ g.adj[v]) & ~bit(v) for v in range(g.n))
    return Graph(g.n, rows)


def suspension(g: Graph) -> Graph:
    """Add one apex vertex (index n) adjacent to every existing vertex."""
    cap = max_vertices()
    if g.n + 1 > cap:
        raise GraphError(f"suspension exceeds {cap} vertices")
    apex = g.n
    rows = [row | bit(apex) for row in g.adj]
    rows.append(full_mask(g.n))
    return Graph(g.n + 1, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges; g2 relabeled after g1."""
    n = g1.n + g2.n
    cap = max_vertices()
    if n > cap:
        raise GraphError(f"join exceeds {cap} vertices")
    right = full_mask(n) ^ full_mask(g1.n)
    rows = [g1.adj[v] | right for v in range(g1.n)]
    rows += [(g2.adj[v] << g1.n) | full_mask(g1.n) for v in range(g2.n)]
    return Graph(n, tuple(rows))


def one_sum(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Glue g2 onto g1 by identifying v2 with v1 (union of edge sets)."""
    _check_vertex(g1, v1)
    _check_vertex(g2, v2)
    n = g1.n + g2.n - 1
    cap = max_vertices()
    if n > cap:
        raise GraphError(f"one-sum exceeds {cap} vertices")
    remap = {}
    nxt = g1.n
    for w in range(g2.n):
        if w == v2:
            remap[w] = v1
        else:
            remap[w] = nxt
            nxt += 1
    rows = list(g1.adj) + [0] * (g2.n - 1)
    for i, j in edges(g2):
        a, b = remap[i], remap[j]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(n, tuple(rows))


def is_dominating_set(g: Graph, s: Mask) -> bool:
    """True iff the closed neighborhoods of s cover every vertex."""
    if s & ~full_mask(g.n):
        raise GraphError("vertex set has bits outside the graph")
    cover = 0
    for v in iter_bits(s):
        cover |= g.adj[v] | bit(v)
    return cover == full_mask(g.n)


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Apply the permutation old->new to every vertex."""
    rows = [0] * g.n
    for i, j in edges(g):
        a, b = perm[i], perm[j]
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(g.n, tuple(rows))


def blocks(g: Graph) -> list[tuple[Mask, list[Edge]]]:
    """Biconnected components as (vertex_mask, edge_list); bridges count.

    Isolated vertices belong to no block.
    """
    disc = [0] * g.n
    low = [0] * g.n
    timer = 1
    stack: list[Edge] = []
    out: list[tuple[Mask, list[Edge]]] = []

    def emit(until: Edge) -> None:
        blk = []
        while True:
            e = stack.pop()
            blk.append(e)
            if e == until:
                break
        vmask = 0
        for a, b in blk:
            vmask |= bit(a) | bit(b)
        out.append((vmask, sorted(tuple(sorted(e)) for e in blk)))

    def dfs(u: int, parent: int) -> None:
        nonlocal timer
        disc[u] = low[u] = timer
        timer += 1
        for w in iter_bits(g.adj[u]):
            if disc[w] == 0:
                stack.append((u, w))
                dfs(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    emit((u, w))
            elif w != parent and disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])

    for v in range(g.n):
        if disc[v] == 0:
            dfs(v, -1)
    return out


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


# Named families used across the test suites and the CLI examples.

def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(l: int, m: int) -> Graph:
    return from_edges(l + m, [(i, l + j) for i in range(l) for j in range(m)])


def complete_multipartite(parts: list[int]) -> Graph:
    offsets = []
    total = 0
    for p in parts:
        if p < 1:
            raise GraphError("part sizes must be positive")
        offsets.append(total)
        total += p
    es = []
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            for i in range(parts[a]):
                for j in range(parts[b]):
                    es.append((offsets[a] + i, offsets[b] + j))
    return from_edges(total, es)


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices with center 0."""
    return from_edges(n, [(0, i) for i in range(1, n)])
