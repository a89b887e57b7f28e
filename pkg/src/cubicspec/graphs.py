"""Core graph type and the standard constructions used throughout.

Vertices are always the dense integers 0..n-1 and every construction
defines a deterministic labelled output, so downstream golden values are
byte-stable.
"""

from __future__ import annotations

import numpy as np

from .errors import StructureError


def _normalize_edge(u, v):
    if u == v:
        raise ValueError(f"loop edge ({u},{v}) not allowed")
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Immutable after construction; safe to share and to use as a dict key.
    """

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen = set()
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            e = _normalize_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        self.n = n
        self.edges = tuple(sorted(seen))
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    # -- basic structure ------------------------------------------------

    @property
    def m(self):
        return len(self.edges)

    def neighbors(self, v):
        return self._adj[v]

    def degree(self, v):
        return len(self._adj[v])

    def degrees(self):
        return tuple(len(a) for a in self._adj)

    def is_cubic(self):
        return all(len(a) == 3 for a in self._adj)

    def is_regular(self, k):
        return all(len(a) == k for a in self._adj)

    def has_edge(self, u, v):
        return _normalize_edge(u, v) in self._edge_set()

    def _edge_set(self):
        return set(self.edges)

    def adjacency_matrix(self):
        """Dense 0/1 adjacency matrix as int64."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = 1
            a[v, u] = 1
        return a

    # -- traversal ------------------------------------------------------

    def components(self):
        """Connected components as sorted vertex tuples, ordered by minimum."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self._adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self):
        return self.n <= 1 or len(self.components()) == 1

    def bipartition(self):
        """A 2-coloring (tuple of 0/1 per vertex) or None if not bipartite."""
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self._adj[v]:
                    if color[w] == -1:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return None
        return tuple(color)

    def is_bipartite(self):
        return self.bipartition() is not None

    # -- derived graphs ---------------------------------------------------

    def relabel(self, perm):
        """Image under the vertex map v -> perm[v] (perm must be a bijection)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertex set")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def delete_vertex(self, v):
        """Induced subgraph on the other vertices, compacted to 0..n-2."""
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range")
        remap = {u: (u if u < v else u - 1) for u in range(self.n) if u != v}
        return Graph(
            self.n - 1,
            [(remap[a], remap[b]) for a, b in self.edges if v not in (a, b)],
        )

    def induced(self, vertices):
        """Induced subgraph on `vertices`, relabelled in their sorted order."""
        vs = sorted(set(vertices))
        remap = {v: i for i, v in enumerate(vs)}
        return Graph(
            len(vs),
            [(remap[a], remap[b]) for a, b in self.edges
             if a in remap and b in remap],
        )

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Graph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def check_vertex_set(g, vertices):
    """Validate and normalize a vertex subset of `g` to a sorted tuple."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for order {g.n}")
    return tuple(vs)


# ---------------------------------------------------------------------------
# standard constructions
# ---------------------------------------------------------------------------

def disjoint_union(*graphs):
    """Disjoint union; the i-th argument's vertices are shifted by the
    total order of the preceding arguments."""
    n = 0
    edges = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges)


def line_graph(g):
    """Line graph: one vertex per edge of g (in g's sorted edge order),
    adjacent when the edges share an endpoint."""
    edges = g.edges
    new_edges = []
    for i in range(len(edges)):
        a, b = edges[i]
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if a == c or a == d or b == c or b == d:
                new_edges.append((i, j))
    return Graph(len(edges), new_edges)


def subdivision(g):
    """Complete subdivision: every edge replaced by a path of length 2.

    The subdivision vertex of the i-th edge (sorted order) gets id n + i.
    """
    edges = []
    for i, (u, v) in enumerate(g.edges):
        w = g.n + i
        edges.append((u, w))
        edges.append((w, v))
    return Graph(g.n + g.m, edges)


def bipartite_double(g):
    """Bipartite double cover: vertices (v,0) -> v and (v,1) -> n + v,
    with (u,0) ~ (v,1) exactly when u ~ v."""
    edges = []
    for u, v in g.edges:
        edges.append((u, g.n + v))
        edges.append((v, g.n + u))
    return Graph(2 * g.n, edges)


def closed_walks(g, k):
    """Number of closed k-walks, i.e. the exact integer trace of A^k."""
    if k not in (2, 3, 4):
        raise ValueError("k must be 2, 3 or 4")
    a = g.adjacency_matrix()
    p = a
    for _ in range(k - 1):
        p = p @ a
    return int(np.trace(p))


def triangle_count(g):
    """Exact number of triangles (3-cycles)."""
    count = 0
    eset = g._edge_set()
    for u, v in g.edges:
        nu = g.neighbors(u)
        for w in nu:
            if w > v and (v, w) in eset:
                count += 1
    return count


# ---------------------------------------------------------------------------
# named graphs
# ---------------------------------------------------------------------------

def _k4():
    return Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])


def _k33():
    return Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])


def _prism():
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                     (0, 3), (1, 4), (2, 5)])


def _cube():
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            w = v ^ bit
            if v < w:
                edges.append((v, w))
    return Graph(8, edges)


def _petersen():
    edges = [(i, (i + 1) % 5) for i in range(5)]              # outer cycle
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]     # inner star
    edges += [(i, 5 + i) for i in range(5)]                   # spokes
    return Graph(10, edges)


def _gadget_f():
    # K4 on 0..3 minus the edge {0,1}, plus apex 4 joined to 0 and 1.
    return Graph(5, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)])


def _gadget_f_prime():
    # Two copies of F (apexes 4 and 9) with both apexes joined to a new
    # middle vertex 10; the middle vertex is the unique degree-2 vertex.
    f = _gadget_f()
    edges = list(f.edges)
    edges += [(u + 5, v + 5) for u, v in f.edges]
    edges += [(4, 10), (9, 10)]
    return Graph(11, edges)


def _gadget_f_double_prime():
    # Disjoint F (apex 4) and F' (middle 15) with their degree-2 vertices
    # joined; cubic of order 16.
    f = _gadget_f()
    fp = _gadget_f_prime()
    edges = list(f.edges)
    edges += [(u + 5, v + 5) for u, v in fp.edges]
    edges.append((4, 15))
    return Graph(16, edges)


_CATALOG = {
    "K4": _k4,
    "K33": _k33,
    "prism": _prism,
    "cube": _cube,
    "petersen": _petersen,
    "F": _gadget_f,
    "Fprime": _gadget_f_prime,
    "Fdoubleprime": _gadget_f_double_prime,
}


def catalog(name):
    """Fixed labelled copy of a named graph.

    Known names: K4, K33, prism, cube, petersen, F, Fprime, Fdoubleprime.
    """
    try:
        builder = _CATALOG[name]
    except KeyError:
        raise StructureError(
            f"unknown catalog name {name!r}; known: {', '.join(sorted(_CATALOG))}"
        ) from None
    return builder()


def catalog_names():
    return sorted(_CATALOG)
