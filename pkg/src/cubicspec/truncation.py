"""Vertex truncation of cubic graphs, its inverse, and cospectral families.

Truncating a degree-3 vertex replaces it by a triangle whose corners pick
up the three former edges.  Labelling is deterministic: a truncated
vertex v keeps its own id as triangle corner 0 and the two fresh corners
are appended after the original vertex range, in ascending order of the
truncated vertices; corner k attaches to v's k-th neighbour in ascending
order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CertificationError, StructureError
from .graphs import Graph, check_vertex_set
from .isomorphism import ISO_ORDER_BUDGET, canonical_form, is_isomorphic
from .spectral import are_cospectral, truncated_shape_check


@dataclass
class TruncationTrace:
    """Construction record of a (partial) truncation.

    triangles maps each truncated vertex to its replacement triangle
    (corner k attaches to the k-th neighbour in ascending order);
    edge_map maps each original edge to its surviving edge.
    """

    source_order: int
    triangles: dict
    edge_map: dict

    def validate(self):
        seen = set()
        for v, tri in self.triangles.items():
            if len(set(tri)) != 3:
                raise StructureError(f"degenerate triangle for vertex {v}",
                                     detail=tri)
            if seen & set(tri):
                raise StructureError("triangles are not pairwise disjoint",
                                     detail=(v, tri))
            seen.update(tri)
        return True

    def to_json(self):
        return {
            "source_order": self.source_order,
            "triangles": {str(v): list(t) for v, t in sorted(self.triangles.items())},
            "edge_map": {f"{u},{v}": list(e)
                         for (u, v), e in sorted(self.edge_map.items())},
        }


def truncate_set(g, vertices):
    """Truncate every vertex of `vertices` (all must have degree 3).

    Returns (graph, trace); untouched vertex ids are stable and the two
    fresh corners per truncated vertex are appended at the end.
    """
    vs = check_vertex_set(g, vertices)
    for v in vs:
        if g.degree(v) != 3:
            raise StructureError(
                f"vertex {v} has degree {g.degree(v)}, truncation needs 3")
    n = g.n
    triangles = {}
    for i, v in enumerate(vs):
        triangles[v] = (v, n + 2 * i, n + 2 * i + 1)

    def corner(v, other):
        # triangle corner of v picking up the former edge to `other`
        slot = g.neighbors(v).index(other)
        return triangles[v][slot]

    edges = []
    edge_map = {}
    truncated = set(vs)
    for u, v in g.edges:
        eu = corner(u, v) if u in truncated else u
        ev = corner(v, u) if v in truncated else v
        e = (eu, ev) if eu < ev else (ev, eu)
        edges.append(e)
        edge_map[(u, v)] = e
    for v in vs:
        a, b, c = triangles[v]
        edges.extend([(a, b), (a, c), (b, c)])
    trace = TruncationTrace(source_order=n, triangles=triangles,
                            edge_map=edge_map)
    return Graph(n + 2 * len(vs), edges), trace


def truncate_full_traced(g):
    """Full truncation with its construction trace."""
    if not g.is_cubic():
        raise StructureError("full truncation needs a cubic graph")
    return truncate_set(g, range(g.n))


def truncate_full(g):
    """Full truncation T of a cubic graph: every vertex becomes a triangle."""
    return truncate_full_traced(g)[0]


def _all_triangles(g):
    eset = set(g.edges)
    tris = []
    for u, v in g.edges:
        for w in g.neighbors(u):
            if w > v and (v, w) in eset:
                tris.append((u, v, w))
    return tris


def contract_triangles(h):
    """Inverse of full truncation: one vertex per triangle of h.

    Preconditions (violations raise StructureError with the offending
    structure): h cubic, triangles pairwise disjoint and covering every
    vertex, at most one edge between any two triangles.
    """
    if not h.is_cubic():
        bad = next(v for v in range(h.n) if h.degree(v) != 3)
        raise StructureError(f"not cubic: vertex {bad} has degree {h.degree(bad)}",
                             detail=bad)
    tris = _all_triangles(h)
    owner = {}
    for t in tris:
        for v in t:
            if v in owner:
                raise StructureError("overlapping triangles",
                                     detail=(owner[v], t))
            owner[v] = t
    uncovered = [v for v in range(h.n) if v not in owner]
    if uncovered:
        raise StructureError("vertices not covered by any triangle",
                             detail=tuple(uncovered))
    index = {t: i for i, t in enumerate(sorted(tris))}
    edges = set()
    for u, v in h.edges:
        tu, tv = owner[u], owner[v]
        if tu == tv:
            continue
        e = tuple(sorted((index[tu], index[tv])))
        if e in edges:
            raise StructureError("two triangles joined by more than one edge",
                                 detail=(tu, tv))
        edges.add(e)
    return Graph(len(tris), edges)


def recognize_truncation(h):
    """Pre-image under full truncation, or None if h is not a truncation.

    Runs the cheap spectral shape check first; a shape-pass that then
    fails structural contraction is impossible and raises
    CertificationError as a correctness tripwire.
    """
    if not truncated_shape_check(h):
        return None
    try:
        return contract_triangles(h)
    except StructureError as exc:
        raise CertificationError(
            "shape check passed but triangle contraction failed: "
            f"{exc}") from exc


def _certify_preimage(truncated, expected):
    """Tripwire: contracting `truncated` must recover `expected`.

    When the graphs sit beyond the canonical-labelling budget, both sides
    are contracted further until the comparison fits.
    """
    a = recognize_truncation(truncated)
    if a is None:
        raise CertificationError(
            f"truncation of order {truncated.n} fails the spectral shape check")
    b = expected
    while a.n > ISO_ORDER_BUDGET:
        a = recognize_truncation(a)
        b = recognize_truncation(b)
        if a is None or b is None:
            raise CertificationError("inverse truncation chain broken")
    if not is_isomorphic(a, b):
        raise CertificationError(
            "triangle contraction does not recover the truncated graph")


def family_pairs(g, h, k):
    """Iterated-truncation family from a cospectral non-isomorphic pair.

    Returns [(T(g), T(h)), (T^2(g), T^2(h)), ...] up to k iterations; every
    emitted pair is certified exactly cospectral and non-isomorphic, and a
    certification failure aborts with CertificationError.

    Non-isomorphism at orders beyond the canonical-labelling budget is
    certified through the constructive inverse: contracting each member
    recovers the previous level, whose members are already certified
    non-isomorphic.
    """
    if not (g.is_cubic() and h.is_cubic()):
        raise StructureError("family generation needs cubic inputs")
    if not 1 <= k <= 3:
        raise ValueError("k must be between 1 and 3")
    if not are_cospectral(g, h):
        raise ValueError("inputs are not cospectral")
    if is_isomorphic(g, h):
        raise ValueError("inputs are isomorphic")
    pairs = []
    cur_g, cur_h = g, h
    for _ in range(k):
        tg = truncate_full(cur_g)
        th = truncate_full(cur_h)
        if not are_cospectral(tg, th):
            raise CertificationError(
                f"truncations of a cospectral pair are not cospectral "
                f"at order {tg.n}")
        if tg.n <= ISO_ORDER_BUDGET:
            if canonical_form(tg) == canonical_form(th):
                raise CertificationError(
                    f"truncations of a non-isomorphic pair are isomorphic "
                    f"at order {tg.n}")
        else:
            _certify_preimage(tg, cur_g)
            _certify_preimage(th, cur_h)
        pairs.append((tg, th))
        cur_g, cur_h = tg, th
    return pairs
