"""Isomorphism-free streams of free trees and small connected graphs.

Trees are generated incrementally: every free tree on n vertices arises by
attaching a leaf to some tree on n-1 vertices, so extending each canonical
representative at every vertex and deduping by canonical code is exhaustive.
Full Prufer-sequence enumeration is also provided; it is the independent
cross-check oracle for small orders (n^(n-2) labeled trees blow up fast).

Connected graphs are enumerated by sweeping all edge subsets of K_n and
marking whole permutation orbits as seen, which dedupes exactly up to
isomorphism without canonicalizing each of the ~2M labeled candidates.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

import numpy as np

from .canonical import canonical_code
from .errors import OutOfRange
from .graph import Graph, from_edge_list

TREE_ORDER_CAP = 16
CONNECTED_ORDER_CAP = 7


@dataclass(frozen=True)
class GraphStream:
    """A materialized, deterministic stream of one graph per isomorphism class."""

    order: int
    source: str  # "generated_trees" | "generated_connected" | "file"
    graphs: tuple[Graph, ...] = field(repr=False)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)


# -- free trees --------------------------------------------------------------

@lru_cache(maxsize=None)
def _tree_reps(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (from_edge_list(1, []),)
    seen: dict[bytes, Graph] = {}
    for base in _tree_reps(n - 1):
        for v in range(base.n):
            adj = list(base.adj) + [0]
            adj[v] |= 1 << (n - 1)
            adj[n - 1] = 1 << v
            t = Graph(n, adj)
            code = canonical_code(t, cap=TREE_ORDER_CAP)
            if code not in seen:
                seen[code] = t
    return tuple(seen[code] for code in sorted(seen))


def enumerate_trees(n: int) -> GraphStream:
    """All free trees of order n, one per isomorphism class, by ascending code."""
    if not 1 <= n <= TREE_ORDER_CAP:
        raise OutOfRange(f"tree enumeration supports 1 <= n <= {TREE_ORDER_CAP}")
    return GraphStream(order=n, source="generated_trees", graphs=_tree_reps(n))


def prufer_decode(seq: Sequence[int], n: int) -> Graph:
    """Labeled tree on n vertices from a Prufer sequence of length n-2."""
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return from_edge_list(n, edges)


def labeled_trees_by_prufer(n: int) -> Iterator[Graph]:
    """Every labeled tree on n vertices, one per Prufer sequence."""
    if n < 1:
        raise OutOfRange("need n >= 1")
    if n == 1:
        yield from_edge_list(1, [])
        return
    if n == 2:
        yield from_edge_list(2, [(0, 1)])
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def trees_by_prufer_dedupe(n: int) -> tuple[Graph, ...]:
    """Free trees of order n via full Prufer enumeration plus canonical dedupe.

    Exponential in n; intended as a small-order cross-check of _tree_reps.
    """
    seen: dict[bytes, Graph] = {}
    for t in labeled_trees_by_prufer(n):
        code = canonical_code(t, cap=TREE_ORDER_CAP)
        if code not in seen:
            seen[code] = t
    return tuple(seen[code] for code in sorted(seen))


# -- connected graphs --------------------------------------------------------

def _pair_positions(n: int) -> dict[tuple[int, int], int]:
    pos = {}
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            pos[(i, j)] = idx
            idx += 1
    return pos


def _graph_from_pair_code(n: int, code: int, pairs: list[tuple[int, int]]) -> Graph:
    edges = [pairs[i] for i in range(len(pairs)) if code >> i & 1]
    return from_edge_list(n, edges)


def _orbit_representatives(n: int, connected_only: bool) -> list[Graph]:
    pos = _pair_positions(n)
    pairs = sorted(pos, key=pos.get)
    npairs = len(pairs)
    rows = []
    for perm in permutations(range(n)):
        row = [0] * npairs
        for (i, j), p in pos.items():
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            row[p] = 1 << pos[(a, b)]
        rows.append(row)
    perm_bits = np.array(rows, dtype=np.int64)
    seen = np.zeros(1 << npairs, dtype=np.uint8)
    reps = []
    for code in range(1 << npairs):
        if seen[code]:
            continue
        bits = [i for i in range(npairs) if code >> i & 1]
        if bits:
            orbit = np.bitwise_or.reduce(perm_bits[:, bits], axis=1)
            seen[orbit] = 1
        seen[code] = 1
        g = _graph_from_pair_code(n, code, pairs)
        if not connected_only or g.is_connected():
            reps.append(g)
    return reps


@lru_cache(maxsize=None)
def _connected_reps(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (from_edge_list(1, []),)
    reps = _orbit_representatives(n, connected_only=True)
    keyed = sorted((canonical_code(g), g) for g in reps)
    return tuple(g for _, g in keyed)


def enumerate_connected_graphs(n: int) -> GraphStream:
    """All connected graphs of order n up to isomorphism, by ascending code."""
    if not 2 <= n <= CONNECTED_ORDER_CAP:
        raise OutOfRange(
            f"connected enumeration supports 2 <= n <= {CONNECTED_ORDER_CAP}"
        )
    return GraphStream(order=n, source="generated_connected", graphs=_connected_reps(n))


def stream_from_graphs(order: int, graphs: Sequence[Graph]) -> GraphStream:
    return GraphStream(order=order, source="file", graphs=tuple(graphs))
