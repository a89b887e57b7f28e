"""Enumeration of connected cubic graphs up to isomorphism, order <= 16.

Levels grow by edge insertion: subdivide two distinct edges and join the
two new degree-2 vertices.  The inverse move (contract an edge xy,
rejoining x's and y's other neighbours) is available on every connected
cubic graph except the diamond-cluster graphs, which are seeded
explicitly; parents range over connected classes and two-component
unions of smaller classes (a reduction can disconnect, e.g. across a
bridge).  Children are pre-filtered by requiring the inserted edge to
minimise an isomorph-invariant edge score over all contractible edges,
deduplicated by canonical form, and the per-order class counts are
checked against the published table as a completeness tripwire.

A diamond is K4 minus an edge; its two degree-2 corners are stubs.  A
case analysis of the non-contractibility conditions shows a connected
cubic graph of order >= 6 with no contractible edge is exactly a
"diamond cluster": disjoint diamonds plus an independent set of free
vertices, every stub wired to a stub of another diamond or to a free
vertex, every free vertex wired to three stubs.
"""

from __future__ import annotations

import numpy as np

from .errors import CertificationError
from .graphs import Graph, disjoint_union
from .graph6 import write_graph6
from .isomorphism import canonical_graph

MAX_ENUM_ORDER = 16

# connected cubic graphs per isomorphism class, orders 4..16
KNOWN_CLASS_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509, 16: 4060}

_LEVELS = {}


def diamond_ring(k):
    """Cycle of k diamonds, cubic of order 4k; k = 1 degenerates to K4."""
    if k < 1:
        raise ValueError("need k >= 1")
    edges = []
    for i in range(k):
        x, y, a, b = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(x, y), (x, a), (x, b), (y, a), (y, b)]
    if k == 1:
        edges.append((2, 3))
    else:
        for i in range(k):
            edges.append((4 * i + 3, 4 * ((i + 1) % k) + 2))
    return Graph(4 * k, edges)


def _diamond_clusters(n):
    """All connected diamond-cluster graphs of order n (the seeds that
    edge insertion cannot reach), canonically labelled and deduplicated."""
    out = {}
    for d in range(2, n // 4 + 1):
        f = n - 4 * d
        if f < 0 or f % 2 or 3 * f > 2 * d:
            continue
        base_edges = []
        for i in range(d):
            x, y, a, b = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
            base_edges += [(x, y), (x, a), (x, b), (y, a), (y, b)]
        stubs = [4 * i + 2 for i in range(d)] + [4 * i + 3 for i in range(d)]
        stubs.sort()
        free = list(range(4 * d, 4 * d + f))

        def wire(pending, capacity, acc):
            if not pending:
                if any(capacity[v] for v in free):
                    return  # free vertex short of degree 3
                g = Graph(n, base_edges + acc)
                if g.is_connected():
                    cg = canonical_graph(g)
                    out.setdefault(cg.edges, cg)
                return
            s = pending[0]
            rest = pending[1:]
            for t in rest:  # stub-stub, different diamonds only
                if t // 4 != s // 4:
                    wire([u for u in rest if u != t], capacity,
                         acc + [(s, t)])
            for v in free:
                if capacity[v] > 0:
                    capacity[v] -= 1
                    wire(rest, capacity, acc + [(s, v)])
                    capacity[v] += 1

        wire(stubs, {v: 3 for v in free}, [])
    return sorted(out.values(), key=write_graph6)


def _insert_edges(edges, e1, e2, n):
    """Child edge list: subdivide e1 and e2 with x=n, y=n+1, join x-y."""
    (a, b), (c, d) = e1, e2
    x, y = n, n + 1
    out = [e for e in edges if e != e1 and e != e2]
    out += [(a, x), (b, x), (c, y), (d, y), (x, y)]
    return out


def _contractible_edges(n, adjsets, eset):
    """Edges whose contraction (inverse insertion) yields a simple cubic
    graph: both endpoints' other neighbour pairs non-adjacent and not the
    same pair."""
    out = []
    for u, v in eset:
        au = adjsets[u] - {v}
        av = adjsets[v] - {u}
        a, b = sorted(au)
        c, d = sorted(av)
        if (a, b) == (c, d):
            continue
        if b in adjsets[a] or d in adjsets[c]:
            continue
        out.append((u, v))
    return out


def _accepts(n, edges, new_edge):
    """Keep a child only when its new edge minimises the invariant edge
    score over all contractible edges (ties kept; duplicates collapse in
    the canonical dedupe)."""
    adjsets = [set() for _ in range(n)]
    eset = []
    for u, v in edges:
        adjsets[u].add(v)
        adjsets[v].add(u)
        eset.append((u, v) if u < v else (v, u))
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in eset:
        a[u, v] = 1
        a[v, u] = 1
    a2 = a @ a
    a3 = a2 @ a
    a4 = a3 @ a
    a5 = a4 @ a
    d3, d4, d5 = a3.diagonal(), a4.diagonal(), a5.diagonal()
    vinv = [(int(d3[v]), int(d4[v]), int(d5[v])) for v in range(n)]

    def score(u, v):
        lo, hi = sorted((vinv[u], vinv[v]))
        return (lo, hi, int(a2[u, v]), int(a3[u, v]),
                int(a4[u, v]), int(a5[u, v]))

    target = score(*new_edge)
    for e in _contractible_edges(n, adjsets, eset):
        if score(*e) < target:
            return False
    return True


def _build_level(n):
    """All connected cubic classes of order n, canonically labelled."""
    if n == 4:
        return [canonical_graph(diamond_ring(1))]
    parents = list(_level(n - 2))
    # two-component parents: a contraction across a bridge disconnects
    pairs = []
    total = n - 2
    for a in range(4, total // 2 + 1, 2):
        b = total - a
        comps_a = _level(a)
        comps_b = _level(b)
        if a == b:
            for i in range(len(comps_a)):
                for j in range(i, len(comps_a)):
                    pairs.append((comps_a[i], comps_a[j]))
        else:
            for ga in comps_a:
                for gb in comps_b:
                    pairs.append((ga, gb))

    found = {}

    def consider(child_n, child_edges, new_edge):
        if not _accepts(child_n, child_edges, new_edge):
            return
        g = canonical_graph(Graph(child_n, child_edges))
        found.setdefault(g.edges, g)

    for parent in parents:
        edges = parent.edges
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                child = _insert_edges(edges, edges[i], edges[j], parent.n)
                consider(parent.n + 2, child, (parent.n, parent.n + 1))
    for ga, gb in pairs:
        union = disjoint_union(ga, gb)
        shifted = [(u + ga.n, v + ga.n) for u, v in gb.edges]
        for e1 in ga.edges:
            for e2 in shifted:
                child = _insert_edges(union.edges, e1, e2, union.n)
                consider(union.n + 2, child, (union.n, union.n + 1))
    for seed in _diamond_clusters(n):
        found.setdefault(seed.edges, seed)

    out = sorted(found.values(), key=write_graph6)
    if len(out) != KNOWN_CLASS_COUNTS[n]:
        raise CertificationError(
            f"enumeration found {len(out)} connected cubic classes of order "
            f"{n}, published count is {KNOWN_CLASS_COUNTS[n]}")
    return out


def _level(n):
    if n not in _LEVELS:
        _LEVELS[n] = _build_level(n)
    return _LEVELS[n]


def enumerate_cubic(n):
    """Yield one representative per isomorphism class of connected cubic
    graphs of order n (4 <= n <= 16, even), in a deterministic order."""
    if n % 2:
        raise ValueError(f"cubic graphs have even order, got {n}")
    if not 4 <= n <= MAX_ENUM_ORDER:
        raise ValueError(
            f"enumeration supports 4 <= n <= {MAX_ENUM_ORDER}, got {n}")
    yield from _level(n)
