"""Exact Hamiltonian-cycle decision by pruned backtracking.

Bitmask DFS anchored at vertex 0 with two cuts applied at every node:
every unvisited vertex must keep degree >= 2 among the still-usable
vertices, and the unvisited set must stay reachable from the current
endpoint.  Exact (never a wrong answer) within the order budget.
"""

from __future__ import annotations

from .errors import BudgetExceededError

HAMILTON_ORDER_BUDGET = 200


def is_hamiltonian(g):
    """Exact Hamiltonicity decision (order <= 200)."""
    n = g.n
    if n > HAMILTON_ORDER_BUDGET:
        raise BudgetExceededError(
            f"is_hamiltonian supports order <= {HAMILTON_ORDER_BUDGET}, got {n}")
    if n < 3:
        return False
    if not g.is_connected():
        return False
    if min(g.degrees()) < 2:
        return False

    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    full = (1 << n) - 1
    start_bit = 1

    def dfs(v, visited):
        if visited == full:
            return bool(adj[v] & start_bit)
        rem = full & ~visited
        # degree cut: unvisited vertices must stay traversable
        usable = rem | (1 << v) | start_bit
        m = rem
        while m:
            b = m & -m
            m ^= b
            w = b.bit_length() - 1
            if (adj[w] & usable).bit_count() < 2:
                return False
        # connectivity cut: all of rem reachable from v through rem
        reach = 0
        frontier = adj[v] & rem
        while frontier:
            reach |= frontier
            grow = 0
            m = frontier
            while m:
                b = m & -m
                m ^= b
                grow |= adj[b.bit_length() - 1]
            frontier = grow & rem & ~reach
        if reach != rem:
            return False
        options = adj[v] & rem
        while options:
            b = options & -options
            options ^= b
            if dfs(b.bit_length() - 1, visited | b):
                return True
        return False

    return dfs(0, 1)
