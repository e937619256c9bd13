"""Exact domination and total domination: values, certificates, enumeration.

Values come from a branch-and-bound set-cover search (fast enough for the
exhaustive sweeps); witnesses and the complete list of minimum sets come
from a lexicographic subset search at the optimal cardinality, so reported
witnesses are always the lexicographically smallest minimum set.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import Disconnected, IsolatedVertex, IsStar, NotFound, TooLarge, TooSmall
from .graph import Graph, iter_bits, leaves_mask, mask_of, structure_profile

ENUMERATION_CAP = 20


@dataclass(frozen=True)
class DominationCertificate:
    value: int
    witness: frozenset[int]
    kind: str  # "domination" | "total_domination"


@dataclass(frozen=True)
class MembershipProfile:
    """Which vertices appear in some / every / no minimum total dominating set."""

    in_some: frozenset[int]
    in_all: frozenset[int]
    in_none: frozenset[int]


def is_dominating(g: Graph, s) -> bool:
    s_mask = mask_of(s)
    covered = s_mask
    for v in iter_bits(s_mask):
        covered |= g.adj[v]
    return covered == g.full_mask


def is_total_dominating(g: Graph, s) -> bool:
    """True iff every vertex of g, including members of s, has a neighbor in s."""
    s_mask = mask_of(s)
    return all(g.adj[v] & s_mask for v in range(g.n))


def _greedy_cover_size(covers: tuple[int, ...], full: int) -> int | None:
    covered = 0
    count = 0
    while covered != full:
        best_gain = 0
        best_u = -1
        for u in range(len(covers)):
            gain = (covers[u] & ~covered).bit_count()
            if gain > best_gain:
                best_gain = gain
                best_u = u
        if best_gain == 0:
            return None
        covered |= covers[best_u]
        count += 1
    return count


def _min_cover_size(covers: tuple[int, ...], full: int) -> int | None:
    """Exact minimum number of vertices whose cover sets union to ``full``.

    covers[u] is the element mask vertex u covers; the relation is symmetric
    (u covers v iff v covers u), so candidate covers of element v are the
    set bits of covers[v].
    """
    n = len(covers)
    for v in iter_bits(full):
        if covers[v] == 0:
            return None
    upper = _greedy_cover_size(covers, full)
    if upper is None:
        return None
    best = upper

    def dfs(count: int, covered: int, banned: int) -> None:
        nonlocal best
        # unit propagation: elements with a single remaining candidate
        while True:
            if covered == full:
                if count < best:
                    best = count
                return
            if count + 1 >= best:
                return
            branch_v = -1
            branch_cands = 0
            branch_width = n + 1
            forced = -1
            for v in iter_bits(full & ~covered):
                cands = covers[v] & ~banned
                if cands == 0:
                    return
                w = cands.bit_count()
                if w == 1:
                    forced = cands.bit_length() - 1
                    break
                if w < branch_width:
                    branch_width = w
                    branch_v = v
                    branch_cands = cands
            if forced >= 0:
                count += 1
                covered |= covers[forced]
                continue
            break
        uncovered = full & ~covered
        max_gain = 0
        for u in range(n):
            if banned >> u & 1:
                continue
            gain = (covers[u] & uncovered).bit_count()
            if gain > max_gain:
                max_gain = gain
        if max_gain == 0:
            return
        lower = -(-uncovered.bit_count() // max_gain)
        if count + lower >= best:
            return
        block = banned
        for u in iter_bits(branch_cands):
            dfs(count + 1, covered | covers[u], block)
            block |= 1 << u
            if count + 1 >= best:
                break

    dfs(0, 0, 0)
    return best


def _covers_of_size(
    covers: tuple[int, ...],
    full: int,
    k: int,
    allowed: int,
    first_only: bool,
) -> list[int]:
    """All (or the lex-first) k-subsets of allowed vertices covering ``full``.

    Subsets are explored in lexicographic order of their sorted index tuples,
    so the first result is the lexicographically smallest one.
    """
    n = len(covers)
    out: list[int] = []
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (covers[i] if allowed >> i & 1 else 0)
    max_pc = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        pc = covers[i].bit_count() if allowed >> i & 1 else 0
        max_pc[i] = max(max_pc[i + 1], pc)

    def rec(start: int, count: int, covered: int, chosen: int) -> bool:
        if count == k:
            if covered == full:
                out.append(chosen)
                return first_only
            return False
        slots = k - count
        uncovered = full & ~covered
        if uncovered & ~suffix[start]:
            return False
        if slots * max_pc[start] < uncovered.bit_count():
            return False
        for u in range(start, n - slots + 1):
            if not allowed >> u & 1:
                continue
            if rec(u + 1, count + 1, covered | covers[u], chosen | (1 << u)):
                return True
        return False

    rec(0, 0, 0, 0)
    return out


def _total_covers(g: Graph) -> tuple[int, ...]:
    return g.adj


def _closed_covers(g: Graph) -> tuple[int, ...]:
    return tuple(g.adj[v] | (1 << v) for v in range(g.n))


def _require_no_isolated(g: Graph) -> None:
    for v in range(g.n):
        if g.adj[v] == 0:
            raise IsolatedVertex(f"vertex {v} has degree 0")


@lru_cache(maxsize=200_000)
def gamma_t_value(g: Graph) -> int:
    """Total domination number, value only."""
    _require_no_isolated(g)
    value = _min_cover_size(_total_covers(g), g.full_mask)
    if value is None:
        raise NotFound("total domination infeasible on an isolate-free graph")
    return value


@lru_cache(maxsize=100_000)
def gamma_value(g: Graph) -> int:
    """Domination number, value only."""
    value = _min_cover_size(_closed_covers(g), g.full_mask)
    assert value is not None  # closed neighborhoods always cover
    return value


def gamma_t(g: Graph) -> DominationCertificate:
    value = gamma_t_value(g)
    masks = _covers_of_size(_total_covers(g), g.full_mask, value, g.full_mask, True)
    witness = frozenset(iter_bits(masks[0]))
    return DominationCertificate(value, witness, "total_domination")


def gamma(g: Graph) -> DominationCertificate:
    value = gamma_value(g)
    masks = _covers_of_size(_closed_covers(g), g.full_mask, value, g.full_mask, True)
    witness = frozenset(iter_bits(masks[0]))
    return DominationCertificate(value, witness, "domination")


@lru_cache(maxsize=50_000)
def _all_min_tds_masks(g: Graph) -> tuple[int, ...]:
    value = gamma_t_value(g)
    return tuple(_covers_of_size(_total_covers(g), g.full_mask, value, g.full_mask, False))


def all_min_total_dominating_sets(g: Graph, cap: int = ENUMERATION_CAP) -> list[frozenset[int]]:
    """The complete, duplicate-free list of minimum total dominating sets."""
    if g.n > cap:
        raise TooLarge(f"n={g.n} above the enumeration cap {cap}")
    _require_no_isolated(g)
    return [frozenset(iter_bits(m)) for m in _all_min_tds_masks(g)]


def gamma_t_membership_profile(g: Graph, cap: int = ENUMERATION_CAP) -> MembershipProfile:
    if g.n > cap:
        raise TooLarge(f"n={g.n} above the enumeration cap {cap}")
    _require_no_isolated(g)
    masks = _all_min_tds_masks(g)
    union = 0
    inter = g.full_mask
    for m in masks:
        union |= m
        inter &= m
    return MembershipProfile(
        in_some=frozenset(iter_bits(union)),
        in_all=frozenset(iter_bits(inter)),
        in_none=frozenset(iter_bits(g.full_mask & ~union)),
    )


def gamma_t_set_avoiding_leaves(g: Graph) -> frozenset[int]:
    """A minimum total dominating set disjoint from the leaves.

    Guaranteed to exist for connected non-stars; NotFound here means a bug.
    """
    if g.n < 2:
        raise TooSmall("need n >= 2")
    if not g.is_connected():
        raise Disconnected("graph must be connected")
    if structure_profile(g).is_star:
        raise IsStar("stars have no leaf-avoiding total dominating set")
    value = gamma_t_value(g)
    allowed = g.full_mask & ~leaves_mask(g)
    masks = _covers_of_size(_total_covers(g), g.full_mask, value, allowed, True)
    if not masks:
        raise NotFound("no leaf-avoiding minimum total dominating set: bug")
    return frozenset(iter_bits(masks[0]))
