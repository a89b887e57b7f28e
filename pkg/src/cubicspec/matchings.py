"""Maximum matchings via blossom contraction and no-perfect-matching
certificates via deficiency witness sets.

The matcher is the classical alternating-forest formulation with odd
cycles contracted through a `base` array.  When a perfect matching does
not exist, the witness set comes from the structure of the final failed
search: the set D of vertices reachable at even depth from some exposed
vertex, with S = N(D) minus D.  Deleting S leaves more odd components
than |S|, and the certificate is re-validated exactly before it is
returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import CertificationError
from .graphs import Graph


def _find_augmenting(adj, match, root, p, base, used):
    """One phase of the blossom search from `root`.

    Returns the exposed endpoint of an augmenting path, or -1.  `used`
    ends up marking exactly the outer (even-depth) vertices of the
    alternating tree, blossoms included.
    """
    n = len(adj)
    for i in range(n):
        p[i] = -1
        base[i] = i
        used[i] = False
    used[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = [False] * n
        a = base[a]
        while True:
            seen[a] = True
            if match[a] == -1:
                break
            a = base[p[match[a]]]
        b = base[b]
        while not seen[b]:
            b = base[p[match[b]]]
        return b

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and p[match[to]] != -1):
                # two outer vertices meet: contract the odd cycle
                curbase = lca(v, to)
                blossom = [False] * n
                mark_path(v, curbase, to, blossom)
                mark_path(to, curbase, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = curbase
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif p[to] == -1:
                p[to] = v
                if match[to] == -1:
                    return to
                used[match[to]] = True
                queue.append(match[to])
    return -1


def _augment(match, p, end):
    v = end
    while v != -1:
        pv = p[v]
        ppv = match[pv]
        match[v] = pv
        match[pv] = v
        v = ppv


def maximum_matching(g):
    """Maximum-cardinality matching as a sorted tuple of edges."""
    n = g.n
    adj = g._adj
    match = [-1] * n
    for u, v in g.edges:  # greedy seed
        if match[u] == -1 and match[v] == -1:
            match[u] = v
            match[v] = u
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    for v in range(n):
        if match[v] == -1:
            end = _find_augmenting(adj, match, v, p, base, used)
            if end != -1:
                _augment(match, p, end)
    return tuple(sorted(
        (v, match[v]) for v in range(n) if match[v] > v
    ))


def _missable_vertices(g, match):
    """Vertices left exposed by some maximum matching (the set D)."""
    n = g.n
    adj = g._adj
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    missable = set()
    for root in range(n):
        if match[root] != -1:
            continue
        end = _find_augmenting(adj, match, root, p, base, used)
        if end != -1:
            raise CertificationError(
                "augmenting path found from a supposedly maximum matching")
        missable.update(v for v in range(n) if used[v])
    return missable


@dataclass
class MatchingCertificate:
    """Either a perfect matching, or a witness set S whose deletion
    leaves more odd components than |S|."""

    kind: str  # "matching" | "tutte"
    matching: tuple = None
    witness_set: tuple = None
    odd_components: tuple = None

    def validate(self, g):
        if self.kind == "matching":
            covered = set()
            eset = set(g.edges)
            for u, v in self.matching:
                if (u, v) not in eset:
                    raise CertificationError(f"certificate edge ({u},{v}) not in graph")
                if u in covered or v in covered:
                    raise CertificationError("certificate edges are not disjoint")
                covered.update((u, v))
            if len(covered) != g.n:
                raise CertificationError("certificate does not cover every vertex")
            return True
        remaining = set(range(g.n)) - set(self.witness_set)
        comps = [c for c in g.induced(sorted(remaining)).components()]
        # recompute odd components in original labels
        label = sorted(remaining)
        odd = tuple(sorted(
            tuple(label[v] for v in comp) for comp in comps if len(comp) % 2
        ))
        if odd != self.odd_components:
            raise CertificationError("odd-component list does not validate")
        if len(odd) <= len(self.witness_set):
            raise CertificationError(
                f"{len(odd)} odd components does not exceed |S| = "
                f"{len(self.witness_set)}")
        return True

    def to_json(self):
        if self.kind == "matching":
            return {"kind": "matching", "edges": [list(e) for e in self.matching]}
        return {
            "kind": "tutte",
            "witness_set": list(self.witness_set),
            "odd_components": [list(c) for c in self.odd_components],
        }


def perfect_matching_certificate(g):
    """Perfect matching when one exists, else a validated witness set."""
    if g.n % 2:
        raise ValueError("perfect matchings need even order")
    matching = maximum_matching(g)
    if 2 * len(matching) == g.n:
        cert = MatchingCertificate(kind="matching", matching=matching)
        cert.validate(g)
        return cert
    match = [-1] * g.n
    for u, v in matching:
        match[u] = v
        match[v] = u
    missable = _missable_vertices(g, match)
    witness = set()
    for v in missable:
        witness.update(w for w in g.neighbors(v) if w not in missable)
    witness = tuple(sorted(witness))
    remaining = sorted(set(range(g.n)) - set(witness))
    sub = g.induced(remaining)
    odd = tuple(sorted(
        tuple(remaining[v] for v in comp)
        for comp in sub.components() if len(comp) % 2
    ))
    cert = MatchingCertificate(kind="tutte", witness_set=witness,
                               odd_components=odd)
    cert.validate(g)
    return cert


def has_perfect_matching(g):
    if g.n % 2:
        return False
    return 2 * len(maximum_matching(g)) == g.n
