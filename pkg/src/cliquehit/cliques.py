"""Exact maximum-clique enumeration and clique intersection structure.

Builds the set of all maximum cliques, the intersection graph on them,
its connected components with per-component union and mutual
intersection, and the two counting checks those structures obey.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernel
from .errors import InvariantViolationError
from .graphs import Graph

DEFAULT_CLIQUE_BUDGET = 10_000_000

KERNEL_BACKEND = _kernel.BACKEND


@dataclass(frozen=True)
class CliqueSet:
    """Every maximum clique of a graph, canonically ordered.

    Each clique is an ascending vertex tuple; the tuples are sorted
    lexicographically. `omega` is their common size.
    """

    cliques: tuple[tuple[int, ...], ...]
    omega: int


@dataclass(frozen=True)
class CliqueComponent:
    """One connected component of the clique intersection graph.

    `d_set` is the union and `f_set` the mutual intersection of the
    indexed cliques; f_set is itself a clique of the host graph.
    """

    clique_indices: tuple[int, ...]
    d_set: frozenset[int]
    f_set: frozenset[int]


@dataclass(frozen=True)
class HajnalReport:
    """|intersection| + |union| compared against 2 * omega."""

    lhs: int
    rhs: int
    holds: bool


@dataclass(frozen=True)
class KostochkaReport:
    """Per-component |f_set| against the bound 2*omega - (delta + 1).

    `hypothesis_met` records 3*omega > 2*(delta+1) in exact integer
    arithmetic; when it is false, `holds` carries no guarantee.
    """

    component: int
    f_size: int
    bound: int
    holds: bool
    hypothesis_met: bool


def hypothesis_met(omega: int, delta: int) -> bool:
    """3*omega > 2*(delta + 1), evaluated in exact integer arithmetic."""
    return 3 * omega > 2 * (delta + 1)


def maximum_cliques(g: Graph, node_budget: int = DEFAULT_CLIQUE_BUDGET) -> CliqueSet:
    """Enumerate all maximum cliques exactly.

    Raises ValueError on the empty graph and BudgetExceededError when the
    recursion exceeds `node_budget` nodes.
    """
    if g.n == 0:
        raise ValueError("clique enumeration requires at least one vertex")
    # Recursion depth is bounded by n; keep Python's limit above that for
    # the pure-Python backend.
    limit = sys.getrecursionlimit()
    if limit < g.n + 200:
        sys.setrecursionlimit(g.n + 200)
    cliques, _nodes = _kernel.enumerate_max_cliques(g.n, list(g.masks), node_budget)
    cliques.sort()
    return CliqueSet(cliques=tuple(cliques), omega=len(cliques[0]))


def clique_graph(cs: CliqueSet) -> Graph:
    """Graph on the cliques of `cs`; edge when two cliques share a vertex."""
    sets = [frozenset(c) for c in cs.cliques]
    r = len(sets)
    edges = [
        (i, j) for i in range(r) for j in range(i + 1, r) if sets[i] & sets[j]
    ]
    return Graph(r, edges)


def components(cs: CliqueSet, cg: Graph) -> list[CliqueComponent]:
    """Connected components of the clique graph, ordered by smallest
    clique index, each carrying its union and mutual intersection."""
    if cg.n != len(cs.cliques):
        raise ValueError("clique graph does not match the clique set")
    seen = [False] * cg.n
    comps: list[CliqueComponent] = []
    for start in range(cg.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        indices = []
        while stack:
            i = stack.pop()
            indices.append(i)
            for j in cg.adj[i]:
                if not seen[j]:
                    seen[j] = True
                    stack.append(j)
        indices.sort()
        members = [frozenset(cs.cliques[i]) for i in indices]
        d_set = frozenset().union(*members)
        f_set = members[0]
        for s in members[1:]:
            f_set &= s
        comps.append(CliqueComponent(tuple(indices), d_set, f_set))
    comps.sort(key=lambda c: c.clique_indices[0])
    return comps


def check_hajnal(comp: CliqueComponent, cs: CliqueSet) -> HajnalReport:
    """Check |f_set| + |d_set| >= 2 * omega for one component."""
    lhs = len(comp.f_set) + len(comp.d_set)
    rhs = 2 * cs.omega
    return HajnalReport(lhs=lhs, rhs=rhs, holds=lhs >= rhs)


def check_hajnal_subset(cs: CliqueSet, indices: Iterable[int]) -> HajnalReport:
    """Same check for an arbitrary nonempty sub-collection of cliques.

    The inequality holds for any collection of maximum cliques, not just
    whole components, so callers may pass any index subset.
    """
    idx = sorted(set(indices))
    if not idx:
        raise ValueError("need at least one clique index")
    members = [frozenset(cs.cliques[i]) for i in idx]
    union = frozenset().union(*members)
    inter = members[0]
    for s in members[1:]:
        inter &= s
    lhs = len(inter) + len(union)
    rhs = 2 * cs.omega
    return HajnalReport(lhs=lhs, rhs=rhs, holds=lhs >= rhs)


def check_kostochka(
    g: Graph, cs: CliqueSet, comps: Sequence[CliqueComponent]
) -> list[KostochkaReport]:
    """Check |f_set| >= 2*omega - (delta + 1) on every component."""
    delta = g.max_degree()
    hyp = hypothesis_met(cs.omega, delta)
    bound = 2 * cs.omega - (delta + 1)
    return [
        KostochkaReport(
            component=i,
            f_size=len(comp.f_set),
            bound=bound,
            holds=len(comp.f_set) >= bound,
            hypothesis_met=hyp,
        )
        for i, comp in enumerate(comps)
    ]


def assert_universal_in_union(g: Graph, comps: Sequence[CliqueComponent]) -> None:
    """Every f_set vertex must be adjacent to every other d_set vertex.

    Structural consequence of f_set being contained in each clique of
    the component; a failure means the enumeration or the component
    bookkeeping is broken.
    """
    for comp in comps:
        for v in comp.f_set:
            missing = comp.d_set - g.adj[v] - {v}
            if missing:
                raise InvariantViolationError(
                    f"vertex {v} of a component core is not adjacent to {sorted(missing)[:5]}"
                )


def build_verify_report(
    g: Graph, cs: CliqueSet, comps: Sequence[CliqueComponent]
) -> dict:
    """JSON-ready report for the two component checks (schema v1)."""
    delta = g.max_degree()
    kost = check_kostochka(g, cs, comps)
    return {
        "schema_version": 1,
        "omega": cs.omega,
        "delta": delta,
        "hypothesis_met": hypothesis_met(cs.omega, delta),
        "components": [
            {
                "component": i,
                "n_cliques": len(comp.clique_indices),
                "d_size": len(comp.d_set),
                "f_size": len(comp.f_set),
            }
            for i, comp in enumerate(comps)
        ],
        "hajnal": [
            {
                "component": i,
                "lhs": rep.lhs,
                "rhs": rep.rhs,
                "holds": rep.holds,
            }
            for i, rep in enumerate(check_hajnal(c, cs) for c in comps)
        ],
        "kostochka": [
            {
                "component": rep.component,
                "f_size": rep.f_size,
                "bound": rep.bound,
                "holds": rep.holds,
                "hypothesis_met": rep.hypothesis_met,
            }
            for rep in kost
        ],
    }
