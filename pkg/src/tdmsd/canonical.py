"""Canonical byte codes deciding isomorphism for small graphs.

Trees get a rooted-at-center canonical form; everything else goes through
vertex-invariant refinement followed by backtracking over the orderings the
refinement leaves open.  Codes of two graphs are equal iff the graphs are
isomorphic, and tree codes can never collide with non-tree codes (distinct
prefixes).
"""

from __future__ import annotations

from .errors import TooLarge
from .graph import Graph, iter_bits

DEFAULT_CAP = 16


def tree_centers(g: Graph) -> tuple[int, ...]:
    """The one or two middle vertices of a tree, by iterative leaf peeling."""
    n = g.n
    if n <= 2:
        return tuple(range(n))
    deg = [g.degree(v) for v in range(n)]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in iter_bits(g.adj[v]):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return tuple(sorted(layer))


def _rooted_code(g: Graph, root: int, labels: str | None) -> bytes:
    def rec(v: int, parent: int) -> bytes:
        subs = sorted(rec(w, v) for w in iter_bits(g.adj[v]) if w != parent)
        mid = labels[v].encode() if labels is not None else b""
        return b"(" + mid + b"".join(subs) + b")"

    return rec(root, -1)


def tree_code(g: Graph, labels: str | None = None) -> bytes:
    """Canonical form of a free tree, optionally with per-vertex labels."""
    return min(_rooted_code(g, c, labels) for c in tree_centers(g))


def _initial_cells(g: Graph) -> list[list[int]]:
    n = g.n
    dists = [g.bfs_distances(v) for v in range(n)]
    invariant = {}
    for v in range(n):
        nbr_degs = tuple(sorted(g.degree(w) for w in iter_bits(g.adj[v])))
        # -1 marks unreachable; sorting keeps the key deterministic
        dist_multiset = tuple(sorted(dists[v]))
        invariant[v] = (g.degree(v), nbr_degs, dist_multiset)
    cells: dict[tuple, list[int]] = {}
    for v in range(n):
        cells.setdefault(invariant[v], []).append(v)
    return [cells[key] for key in sorted(cells)]


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [0] * len(cells)
        for i, cell in enumerate(cells):
            for v in cell:
                masks[i] |= 1 << v
        nxt: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                nxt.append(cell)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((g.adj[v] & m).bit_count() for m in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) > 1:
                changed = True
            for key in sorted(keyed):
                nxt.append(keyed[key])
        cells = nxt
        if not changed:
            return cells


def _order_bits(g: Graph, order: list[int]) -> int:
    # upper-triangle adjacency bits of the relabeled graph, row-major
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    bits = 0
    idx = 0
    for i in range(g.n):
        vi = order[i]
        for j in range(i + 1, g.n):
            if g.adj[vi] >> order[j] & 1:
                bits |= 1 << idx
            idx += 1
    return bits


def _general_code(g: Graph) -> bytes:
    best: int | None = None

    def descend(cells: list[list[int]]) -> None:
        nonlocal best
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                for v in sorted(cell):
                    rest = [w for w in cell if w != v]
                    split = cells[:i] + [[v], rest] + cells[i + 1 :]
                    descend(_refine(g, split))
                return
        order = [cell[0] for cell in cells]
        bits = _order_bits(g, order)
        if best is None or bits < best:
            best = bits
    descend(_refine(g, _initial_cells(g)))
    assert best is not None
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + best.to_bytes((nbits + 7) // 8 or 1, "big")


def canonical_code(g: Graph, cap: int = DEFAULT_CAP) -> bytes:
    """Byte code equal across exactly the isomorphic relabelings of g."""
    if g.n > cap:
        raise TooLarge(f"n={g.n} above the canonical-code cap {cap}")
    if g.is_tree():
        return b"T" + tree_code(g)
    return b"G" + _general_code(g)


def labeled_tree_code(g: Graph, labels: str, cap: int = DEFAULT_CAP) -> bytes:
    """Canonical form of a vertex-labeled tree (label-preserving isomorphism)."""
    if g.n > cap:
        raise TooLarge(f"n={g.n} above the canonical-code cap {cap}")
    return b"L" + tree_code(g, labels)
