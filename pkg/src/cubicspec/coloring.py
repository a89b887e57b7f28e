"""Edge colorings of cubic graphs, coloring transport along truncation,
and the two chromatic-number routines the toolkit needs.

The 3-edge-coloring decision is a plain exhaustive DFS over edges with
forced-move propagation, so a negative answer is a completed search, not
a heuristic.  Witnesses are deterministic: ties always break toward the
smallest edge index and the smallest color.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, StructureError
from .graphs import Graph

CHROMATIC_NUMBER_ORDER_BUDGET = 24


def validate_edge_coloring(g, coloring, colors=None):
    """Check coverage and incident-distinctness; returns the color count."""
    eset = set(g.edges)
    if set(coloring) != eset:
        raise StructureError("coloring does not cover the edge set exactly")
    at_vertex = {}
    for (u, v), c in coloring.items():
        if colors is not None and not 0 <= c < colors:
            raise StructureError(f"color {c} out of range")
        for w in (u, v):
            key = (w, c)
            if key in at_vertex:
                raise StructureError(
                    f"edges {at_vertex[key]} and {(u, v)} share vertex {w} "
                    f"and color {c}")
            at_vertex[key] = (u, v)
    return len(set(coloring.values()))


def _edge_color_search(g, k):
    """Exhaustive k-edge-coloring search; dict edge -> color, or None."""
    m = g.m
    if m == 0:
        return {}
    edges = g.edges
    incident = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    neighbors = []
    for i, (u, v) in enumerate(edges):
        nb = [j for j in incident[u] + incident[v] if j != i]
        neighbors.append(tuple(dict.fromkeys(nb)))

    full = (1 << k) - 1
    avail = [full] * m
    color = [-1] * m
    uncolored = m

    def assign(i, c, trail):
        nonlocal uncolored
        color[i] = c
        uncolored -= 1
        trail.append((i, -1, None))
        forced = [(i, c)]
        while forced:
            j, cj = forced.pop()
            bit = 1 << cj
            for t in neighbors[j]:
                if color[t] != -1:
                    # two edges forced in the same wave may collide here
                    if color[t] == cj:
                        return False
                    continue
                if not avail[t] & bit:
                    continue
                trail.append((t, color[t], avail[t]))
                avail[t] &= ~bit
                if avail[t] == 0:
                    return False
                if (avail[t] & (avail[t] - 1)) == 0:
                    ct = avail[t].bit_length() - 1
                    color[t] = ct
                    uncolored -= 1
                    forced.append((t, ct))
        return True

    def undo(trail):
        nonlocal uncolored
        for j, oldc, oldavail in reversed(trail):
            if oldavail is None:
                color[j] = -1
                uncolored += 1
            else:
                if color[j] != -1 and oldc == -1:
                    color[j] = -1
                    uncolored += 1
                avail[j] = oldavail

    def best_edge():
        pick, fewest = -1, k + 1
        for i in range(m):
            if color[i] == -1:
                c = bin(avail[i]).count("1")
                if c < fewest:
                    pick, fewest = i, c
                    if c <= 1:
                        break
        return pick

    def dfs():
        if uncolored == 0:
            return True
        i = best_edge()
        options = avail[i]
        while options:
            bit = options & -options
            options ^= bit
            trail = []
            if assign(i, bit.bit_length() - 1, trail) and dfs():
                return True
            undo(trail)
        return False

    if dfs():
        return {edges[i]: color[i] for i in range(m)}
    return None


@dataclass
class ChromaticIndexResult:
    """Exact chromatic-index decision for a cubic graph.

    `witness` is a proper edge coloring with `value` colors; `exhausted`
    records that a direct 3-coloring search was run to completion when
    value is 4; `method` is how the decision was certified ("search",
    "lift" or "restriction").
    """

    value: int
    witness: dict
    exhausted: bool
    method: str = "search"

    def to_json(self):
        return {
            "value": self.value,
            "exhausted": self.exhausted,
            "method": self.method,
            "witness": [
                {"edge": [u, v], "color": c}
                for (u, v), c in sorted(self.witness.items())
            ],
        }


def chromatic_index(g):
    """Exact chromatic index of a cubic graph: 3 or 4, with witness."""
    if not g.is_cubic():
        raise StructureError("chromatic_index is defined here for cubic graphs")
    witness = _edge_color_search(g, 3)
    if witness is not None:
        validate_edge_coloring(g, witness, colors=3)
        return ChromaticIndexResult(value=3, witness=witness, exhausted=False)
    witness = _edge_color_search(g, 4)
    if witness is None:
        raise StructureError("cubic graph admits no 4-edge-coloring (impossible)")
    validate_edge_coloring(g, witness, colors=4)
    return ChromaticIndexResult(value=4, witness=witness, exhausted=True)


def lift_coloring(g, coloring, trace):
    """Transport a 3-edge-coloring of g to its full truncation.

    Surviving edges keep their color; each triangle edge takes the color
    of the edge meeting the triangle in the opposite corner.
    """
    if validate_edge_coloring(g, coloring, colors=3) > 3:
        raise StructureError("lift needs a 3-edge-coloring")
    if set(trace.triangles) != set(range(g.n)):
        raise StructureError("trace does not describe a full truncation")
    lifted = {}
    for e, image in trace.edge_map.items():
        lifted[image] = coloring[e]
    for v, tri in trace.triangles.items():
        ext = [coloring[_norm(v, w)] for w in g.neighbors(v)]
        for k in range(3):
            a, b = tri[(k + 1) % 3], tri[(k + 2) % 3]
            lifted[_norm(a, b)] = ext[k]
    return lifted


def restrict_coloring(g, trace, lifted):
    """Read a 3-edge-coloring of the truncation back onto the original.

    Each original edge takes the color of its surviving image; the result
    is validated, which is what makes a non-3-colorable original certify
    its truncation as non-3-colorable.
    """
    coloring = {e: lifted[image] for e, image in trace.edge_map.items()}
    validate_edge_coloring(g, coloring, colors=3)
    return coloring


def _norm(u, v):
    return (u, v) if u < v else (v, u)


def chromatic_index_of_truncation(truncated, parent, parent_result, trace):
    """Chromatic index of T(parent) certified from the parent's decision,
    without searching the (possibly large) truncated graph.

    Class 1 lifts the parent's witness constructively; class 2 follows
    from restriction: any 3-coloring of the truncation would restrict to
    one of the parent, whose search space was exhausted.
    """
    if parent_result.value == 3:
        witness = lift_coloring(parent, parent_result.witness, trace)
        validate_edge_coloring(truncated, witness, colors=3)
        return ChromaticIndexResult(value=3, witness=witness,
                                    exhausted=False, method="lift")
    witness = _edge_color_search(truncated, 4)
    validate_edge_coloring(truncated, witness, colors=4)
    return ChromaticIndexResult(value=4, witness=witness,
                                exhausted=False, method="restriction")


# ---------------------------------------------------------------------------
# chromatic numbers
# ---------------------------------------------------------------------------

def chromatic_number_cubic(g):
    """Chromatic number of a (possibly disconnected) cubic graph.

    Per component: 4 exactly for K4, 2 for bipartite, otherwise 3; the
    total is the maximum over components.
    """
    if not g.is_cubic():
        raise StructureError("chromatic_number_cubic needs a cubic graph")
    best = 0
    for comp in g.components():
        sub = g.induced(comp)
        if sub.n == 4:  # cubic on 4 vertices is K4
            best = max(best, 4)
        elif sub.is_bipartite():
            best = max(best, 2)
        else:
            best = max(best, 3)
    return best


def _vertex_color_search(g, k):
    """Exhaustive proper k-coloring search with saturation ordering."""
    n = g.n
    if n == 0:
        return []
    adj = g._adj
    colors = [-1] * n
    used_max = 0

    def pick():
        best_v, best_key = -1, None
        for v in range(n):
            if colors[v] != -1:
                continue
            forbidden = {colors[w] for w in adj[v] if colors[w] != -1}
            key = (-len(forbidden), -len(adj[v]), v)
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        return best_v

    def dfs(done):
        nonlocal used_max
        if done == n:
            return True
        v = pick()
        forbidden = {colors[w] for w in adj[v] if colors[w] != -1}
        # classic symmetry break: at most one brand-new color per step
        limit = min(k, used_max + 1)
        for c in range(limit):
            if c in forbidden:
                continue
            colors[v] = c
            prev = used_max
            used_max = max(used_max, c + 1)
            if dfs(done + 1):
                return True
            used_max = prev
            colors[v] = -1
        return False

    if dfs(0):
        return list(colors)
    return None


def chromatic_number_small(g):
    """Exact chromatic number by iterative deepening (order <= 24)."""
    if g.n > CHROMATIC_NUMBER_ORDER_BUDGET:
        raise BudgetExceededError(
            f"chromatic_number_small supports order <= "
            f"{CHROMATIC_NUMBER_ORDER_BUDGET}, got {g.n}")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    for k in range(2, g.n + 1):
        if _vertex_color_search(g, k) is not None:
            return k
    raise AssertionError("unreachable: n colors always suffice")
