"""Pure-Python maximum-clique enumeration kernel.

Pivoting maximal-clique recursion over int bitmasks, filtered on the fly
to maximum size with a running best-size bound. The compiled twin in
_bk_cy.pyx follows the identical pivot rule, branch order, and budget
accounting, so both backends return the same clique list.
"""

from __future__ import annotations

from cliquehit.errors import BudgetExceededError

NAME = "python"


def enumerate_max_cliques(
    n: int, adj: list[int], budget: int
) -> tuple[list[tuple[int, ...]], int]:
    """All maximum cliques of the graph given as per-vertex neighbor masks.

    Returns (cliques, nodes): each clique a sorted vertex tuple, in
    discovery order; nodes is the recursion-node count. Raises
    BudgetExceededError once more than `budget` nodes are entered.

    Pivot rule: the vertex of P | X with the most neighbors in P, lowest
    id on ties. Branch vertices are taken in ascending id order.
    """
    out: list[tuple[int, ...]] = []
    best = 0
    nodes = 0
    stack: list[int] = []

    def expand(p: int, x: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"clique enumeration exceeded {budget} nodes", nodes=nodes
            )
        if p == 0 and x == 0:
            size = len(stack)
            if size > best:
                best = size
                out.clear()
            if size == best:
                out.append(tuple(sorted(stack)))
            return
        if len(stack) + p.bit_count() < best:
            return
        px = p | x
        pivot = -1
        pivot_cnt = -1
        while px:
            u = (px & -px).bit_length() - 1
            px &= px - 1
            cnt = (p & adj[u]).bit_count()
            if cnt > pivot_cnt:
                pivot_cnt = cnt
                pivot = u
        branch = p & ~adj[pivot]
        while branch:
            vbit = branch & -branch
            v = vbit.bit_length() - 1
            branch &= branch - 1
            stack.append(v)
            expand(p & adj[v], x & adj[v])
            stack.pop()
            p &= ~vbit
            x |= vbit

    if n > 0:
        expand((1 << n) - 1, 0)
    return out, nodes
