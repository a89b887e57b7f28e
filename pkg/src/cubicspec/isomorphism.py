"""Canonical labelling and isomorphism testing.

The canonizer runs walk-count vertex invariants, then equitable color
refinement, then individualization backtracking over the first
non-singleton cell; the canonical form is the lexicographically smallest
adjacency encoding over all discrete refinements reached.  Correct for
any graph, budgeted to order <= 64 so the search stays at desk scale.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import BudgetExceededError
from .graphs import Graph

ISO_ORDER_BUDGET = 64


class CanonicalLabel(NamedTuple):
    """Order plus canonically relabelled edge list; equal iff isomorphic."""

    order: int
    edges: tuple


def _initial_colors(g):
    """Isomorph-invariant starting colors from closed-walk counts."""
    if g.n == 0:
        return []
    a = g.adjacency_matrix()
    a2 = a @ a
    a3 = a2 @ a
    a4 = a3 @ a
    a5 = a4 @ a
    sig = [
        (len(g.neighbors(v)), int(a3[v, v]), int(a4[v, v]), int(a5[v, v]))
        for v in range(g.n)
    ]
    order = {s: i for i, s in enumerate(sorted(set(sig)))}
    return [order[s] for s in sig]


def _refine(adj, colors):
    """Equitable refinement; color values are ordered canonically."""
    n = len(colors)
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[w] for w in adj[v])))
            for v in range(n)
        ]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _individualize(colors, v):
    keys = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _relabelled_edges(g, position):
    """Sorted edge list of the graph relabelled by v -> position[v]."""
    return tuple(sorted(
        (position[a], position[b]) if position[a] < position[b]
        else (position[b], position[a])
        for a, b in g.edges
    ))


def canonical_form(g):
    """Canonical label of g; equal labels iff isomorphic graphs."""
    if g.n > ISO_ORDER_BUDGET:
        raise BudgetExceededError(
            f"canonical_form supports order <= {ISO_ORDER_BUDGET}, got {g.n}")
    if g.n == 0:
        return CanonicalLabel(0, ())
    adj = g._adj
    colors = _refine(adj, _initial_colors(g))

    best = [None]

    def search(colors):
        # first non-singleton cell, by canonical color order
        counts = {}
        for c in colors:
            counts[c] = counts.get(c, 0) + 1
        target = None
        for c in sorted(counts):
            if counts[c] > 1:
                target = c
                break
        if target is None:
            edges = _relabelled_edges(g, colors)  # color index == position
            if best[0] is None or edges < best[0]:
                best[0] = edges
            return
        for v in range(len(colors)):
            if colors[v] == target:
                search(_refine(adj, _individualize(colors, v)))

    search(colors)
    return CanonicalLabel(g.n, best[0])


def canonical_graph(g):
    """The canonically labelled copy of g."""
    label = canonical_form(g)
    return Graph(label.order, label.edges)


def is_isomorphic(a, b):
    """Exact isomorphism decision (order <= 64)."""
    if a.n != b.n or a.m != b.m:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)
