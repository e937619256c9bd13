"""Bitmask-backed simple graphs: construction, subdivision, structural queries.

Vertices are dense 0-based indices and every vertex set is an int bitmask,
so neighbourhood algebra is a couple of machine-word operations for graphs
up to MAX_VERTICES vertices.  All values are immutable after construction,
which makes them safe to share across parallel workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    EdgeNotPresent,
    IndexOutOfRange,
    LoopEdge,
    MalformedInput,
    NotInSet,
    TooLarge,
    TooSmall,
)

MAX_VERTICES = 64

Edge = tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)
        self.m = sum(a.bit_count() for a in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adj[v]))

    def closed_mask(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[Edge]:
        """All edges as normalized (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            higher = self.adj[u] >> (u + 1)
            for off in iter_bits(higher):
                out.append((u, u + 1 + off))
        return out

    def reach_mask(self, src: int) -> int:
        seen = 1 << src
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        return self.reach_mask(0) == self.full_mask

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    def bfs_distances(self, src: int) -> list[int]:
        """Distances from ``src``; unreachable vertices get -1."""
        dist = [-1] * self.n
        dist[src] = 0
        seen = 1 << src
        frontier = seen
        d = 0
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            d += 1
            for v in iter_bits(frontier):
                dist[v] = d
        return dist

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with every vertex ``v`` renamed to ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            moved = 0
            for w in iter_bits(self.adj[v]):
                moved |= 1 << perm[w]
            adj[perm[v]] = moved
        return Graph(self.n, adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph, (self.n, self.adj))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a normalized simple graph; duplicate pairs collapse to one edge."""
    if n < 1:
        raise TooSmall(f"need at least one vertex, got n={n}")
    if n > MAX_VERTICES:
        raise TooLarge(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopEdge(f"loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def subdivide(g: Graph, e: tuple[int, int], t: int) -> Graph:
    """Replace edge e=(u,v) by the path u, x1, ..., xt, v.

    The t new vertices are appended as indices n..n+t-1 in path order, so
    original vertex indices survive unchanged.
    """
    if t < 1:
        raise TooSmall(f"subdivision count must be >= 1, got {t}")
    u, v = normalize_edge(*e)
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise EdgeNotPresent(f"edge ({u}, {v}) not in graph")
    n2 = g.n + t
    if n2 > MAX_VERTICES:
        raise TooLarge(f"subdivision would need {n2} vertices")
    adj = list(g.adj) + [0] * t
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    chain = [u] + [g.n + i for i in range(t)] + [v]
    for a, b in zip(chain, chain[1:]):
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(n2, adj)


def subdivide_edges(g: Graph, edges: Sequence[tuple[int, int]]) -> Graph:
    """Subdivide each listed edge exactly once, simultaneously.

    The new vertex for the i-th edge is n+i, following the given edge order.
    """
    norm = [normalize_edge(*e) for e in edges]
    if len(set(norm)) != len(norm):
        raise EdgeNotPresent(f"duplicate edges in {edges}")
    for u, v in norm:
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise EdgeNotPresent(f"edge ({u}, {v}) not in graph")
    n2 = g.n + len(norm)
    if n2 > MAX_VERTICES:
        raise TooLarge(f"subdivision would need {n2} vertices")
    adj = list(g.adj) + [0] * len(norm)
    for i, (u, v) in enumerate(norm):
        x = g.n + i
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        adj[u] |= 1 << x
        adj[v] |= 1 << x
        adj[x] = (1 << u) | (1 << v)
    return Graph(n2, adj)


def closed_neighborhood_mask(g: Graph, vertices_mask: int) -> int:
    """Union of closed neighbourhoods over a bitmask of vertices."""
    out = vertices_mask
    for v in iter_bits(vertices_mask):
        out |= g.adj[v]
    return out


def private_neighborhood_mask(g: Graph, u: int, d_mask: int) -> int:
    """N[u] minus the closed neighbourhood of d - {u}, as a bitmask."""
    others = closed_neighborhood_mask(g, d_mask & ~(1 << u))
    return g.closed_mask(u) & ~others


def private_neighborhood(g: Graph, u: int, d: Iterable[int]) -> frozenset[int]:
    """Private neighbours of u with respect to d: N[u] - N[d - {u}]."""
    d_mask = mask_of(d)
    if not (0 <= u < g.n) or d_mask >> g.n:
        raise IndexOutOfRange(f"vertex out of range for n={g.n}")
    if not d_mask >> u & 1:
        raise NotInSet(f"vertex {u} not in the set")
    return frozenset(iter_bits(private_neighborhood_mask(g, u, d_mask)))


@dataclass(frozen=True)
class StructureProfile:
    """Degree-one structure and global shape facts about one graph."""

    is_connected: bool
    is_tree: bool
    is_star: bool
    leaves: frozenset[int]
    supports: frozenset[int]
    strong_supports: frozenset[int]
    pendant_edges: tuple[Edge, ...]
    inner_edges: tuple[Edge, ...]
    diameter: int | None


def leaves_mask(g: Graph) -> int:
    bits = 0
    for v in range(g.n):
        if g.adj[v].bit_count() == 1:
            bits |= 1 << v
    return bits


def structure_profile(g: Graph) -> StructureProfile:
    lv = leaves_mask(g)
    supports = 0
    strong = 0
    for v in range(g.n):
        k = (g.adj[v] & lv).bit_count()
        if k >= 1:
            supports |= 1 << v
        if k >= 2:
            strong |= 1 << v
    pendant = []
    inner = []
    for u, v in g.edges():
        if (lv >> u & 1) or (lv >> v & 1):
            pendant.append((u, v))
        else:
            inner.append((u, v))
    connected = g.is_connected()
    diameter: int | None = None
    if connected:
        diameter = max(max(g.bfs_distances(v)) for v in range(g.n)) if g.n > 1 else 0
    non_leaf = g.n - lv.bit_count()
    is_star = connected and g.n >= 2 and g.m == g.n - 1 and non_leaf <= 1
    return StructureProfile(
        is_connected=connected,
        is_tree=connected and g.m == g.n - 1,
        is_star=is_star,
        leaves=frozenset(iter_bits(lv)),
        supports=frozenset(iter_bits(supports)),
        strong_supports=frozenset(iter_bits(strong)),
        pendant_edges=tuple(pendant),
        inner_edges=tuple(inner),
        diameter=diameter,
    )


def parse_edge_list(text: str) -> Graph:
    """Read the text edge-list format: first line "n m", then m lines "u v".

    Lines after the m-th edge are tolerated only if blank or starting with
    '#' or 'status:' (family files carry a status sidecar line).
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise MalformedInput("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedInput(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise MalformedInput(f"bad header {lines[0]!r}") from exc
    if len(lines) < 1 + m:
        raise MalformedInput(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1 : 1 + m]:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedInput(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise MalformedInput(f"bad edge line {ln!r}") from exc
    for extra in lines[1 + m :]:
        if not (extra.startswith("#") or extra.startswith("status:")):
            raise MalformedInput(f"unexpected trailing line {extra!r}")
    try:
        g = from_edge_list(n, edges)
    except (IndexOutOfRange, LoopEdge, TooLarge, TooSmall) as exc:
        raise MalformedInput(str(exc)) from exc
    if g.m != m:
        raise MalformedInput(f"header said m={m} but {g.m} distinct edges parsed")
    return g


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
