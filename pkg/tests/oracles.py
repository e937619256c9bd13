"""Independent brute-force oracles used to freeze expected values.

Everything here works on plain adjacency sets and full power-set scans with
no pruning, deliberately sharing no code with the package's search routines.
"""

from __future__ import annotations

import itertools
import random
from collections import deque


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def naive_gamma_t(n, edges):
    adj = adjacency(n, edges)
    for size in range(1, n + 1):
        for combo in itertools.combinations(range(n), size):
            s = set(combo)
            if all(adj[v] & s for v in range(n)):
                return size
    return None


def naive_gamma(n, edges):
    adj = adjacency(n, edges)
    for size in range(0, n + 1):
        for combo in itertools.combinations(range(n), size):
            s = set(combo)
            covered = set(s)
            for v in s:
                covered |= adj[v]
            if len(covered) == n:
                return size
    return None


def naive_all_min_tds(n, edges):
    adj = adjacency(n, edges)
    k = naive_gamma_t(n, edges)
    out = set()
    for combo in itertools.combinations(range(n), k):
        s = set(combo)
        if all(adj[v] & s for v in range(n)):
            out.add(frozenset(s))
    return out


def naive_is_connected(n, edges):
    adj = adjacency(n, edges)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == n


def bfs_distances(n, edges, src):
    adj = adjacency(n, edges)
    dist = {src: 0}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def naive_diameter(n, edges):
    return max(max(bfs_distances(n, edges, s).values()) for s in range(n))


def subdivide_once_each(n, edges, subset):
    edges = [tuple(sorted(e)) for e in edges]
    out = list(edges)
    nxt = n
    for e in subset:
        out.remove(tuple(sorted(e)))
        out.append((e[0], nxt))
        out.append((nxt, e[1]))
        nxt += 1
    return nxt, out


def subdivide_times(n, edges, e, t):
    edges = [tuple(sorted(x)) for x in edges]
    out = list(edges)
    out.remove(tuple(sorted(e)))
    chain = [e[0]] + list(range(n, n + t)) + [e[1]]
    out.extend(zip(chain, chain[1:]))
    return n + t, out


def naive_sd(n, edges, total=True, cap=None):
    fn = naive_gamma_t if total else naive_gamma
    base = fn(n, edges)
    cap = len(edges) if cap is None else min(cap, len(edges))
    for k in range(1, cap + 1):
        for subset in itertools.combinations(edges, k):
            n2, e2 = subdivide_once_each(n, edges, subset)
            if fn(n2, e2) > base:
                return k
    return None


def naive_msd(n, edges, total=True, cap=3):
    fn = naive_gamma_t if total else naive_gamma
    base = fn(n, edges)
    best = None
    for e in edges:
        for t in range(1, cap + 1):
            n2, e2 = subdivide_times(n, edges, e, t)
            if fn(n2, e2) > base:
                if best is None or t < best:
                    best = t
                break
    return best


def random_connected_edges(n, rng: random.Random, extra_prob=0.3):
    """A random connected graph: random spanning tree plus random extra edges."""
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        edges.add(tuple(sorted((order[i], order[rng.randrange(i)]))))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra_prob:
                edges.add((u, v))
    return sorted(edges)


def random_graph_edges(n, rng: random.Random, prob=0.4):
    return [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < prob
    ]


# counting oracles, pure arithmetic

def rooted_tree_counts(n_max):
    """Unlabeled rooted trees r(n) by the divisor-sum recurrence."""
    r = [0] * (n_max + 1)
    if n_max >= 1:
        r[1] = 1
    for n in range(2, n_max + 1):
        total = 0
        for j in range(1, n):
            s = sum(d * r[d] for d in range(1, j + 1) if j % d == 0)
            total += s * r[n - j]
        r[n] = total // (n - 1)
    return r


def free_tree_count(n):
    """Unlabeled free trees from rooted counts (OEIS A000055 relation)."""
    if n == 0:
        return 0
    r = rooted_tree_counts(n)
    value = sum(r[k] * r[n - k] for k in range(n + 1))
    if n % 2 == 0:
        value -= r[n // 2]
    return r[n] - value // 2


def euler_transform(connected_counts):
    """Counts of all graphs per order from connected counts per order.

    connected_counts[k] is the number of isomorphism classes of connected
    graphs on k >= 1 vertices; returns the totals including disconnected.
    """
    n_max = len(connected_counts)
    a = [0] + list(connected_counts)
    c = [0] * (n_max + 1)
    for k in range(1, n_max + 1):
        c[k] = sum(d * a[d] for d in range(1, k + 1) if k % d == 0)
    b = [1] + [0] * n_max
    for k in range(1, n_max + 1):
        b[k] = sum(c[j] * b[k - j] for j in range(1, k + 1)) // k
    return b[1:]
