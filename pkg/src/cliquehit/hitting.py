"""End-to-end pipeline: find a stable set meeting every maximum clique.

The route: enumerate maximum cliques, split the clique graph into
components, take each component's mutual intersection as a block, pick
the smallest integral degree cap the blocks satisfy, and solve the
resulting transversal instance on the induced subgraph. Whenever
3*omega > 2*(delta+1) holds (exact integers), this route is guaranteed
to succeed; a failure under that guarantee raises
InvariantViolationError rather than reporting anything. Without the
guarantee the pipeline falls back to an exhaustive search on small
graphs, so a negative answer is proven, never guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cliques import (
    CliqueComponent,
    CliqueSet,
    clique_graph,
    components,
    hypothesis_met,
    maximum_cliques,
    DEFAULT_CLIQUE_BUDGET,
)
from .errors import BudgetExceededError, InvariantViolationError
from .graphs import Graph, PartitionedGraph
from .isr import DEFAULT_ISR_BUDGET, find_isr_exact, _bits

FOUND_UNDER_HYPOTHESIS = "FOUND_UNDER_HYPOTHESIS"
FOUND_WITHOUT_HYPOTHESIS = "FOUND_WITHOUT_HYPOTHESIS"
NONE_EXISTS_PROVEN = "NONE_EXISTS_PROVEN"
UNKNOWN = "UNKNOWN"

DEFAULT_BRUTE_LIMIT = 20


@dataclass(frozen=True)
class ComponentSummary:
    index: int
    n_cliques: int
    d_size: int
    f_size: int
    f_set: tuple[int, ...]


@dataclass(frozen=True)
class ProofChecks:
    """Exact-rational audit of the intermediate inequalities.

    With t = (delta+1)/3: every component core must exceed t in size,
    core plus union must exceed 4t, and every core vertex must have
    fewer than min(t, |core| - t) neighbors in the other cores. All
    comparisons use Fraction, never floats.
    """

    all_hold: bool
    threshold: str  # t as an exact fraction string
    per_component: tuple[dict, ...]


@dataclass(frozen=True)
class HittingCheck:
    ok: bool
    stable: bool
    internal_edge: tuple[int, int] | None
    missed_cliques: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HittingReport:
    status: str
    omega: int | None
    delta: int | None
    hypothesis_met: bool | None
    components: tuple[ComponentSummary, ...]
    chosen_k: int | None
    stable_set: frozenset[int] | None
    proof_checks: ProofChecks | None
    reason: str | None = None

    def to_json(self, one_based: bool = True) -> dict:
        off = 1 if one_based else 0
        return {
            "schema_version": 1,
            "vertex_base": off,
            "status": self.status,
            "omega": self.omega,
            "delta": self.delta,
            "hypothesis_met": self.hypothesis_met,
            "chosen_k": self.chosen_k,
            "stable_set": (
                sorted(v + off for v in self.stable_set)
                if self.stable_set is not None
                else None
            ),
            "components": [
                {
                    "index": c.index,
                    "n_cliques": c.n_cliques,
                    "d_size": c.d_size,
                    "f_size": c.f_size,
                    "f_set": [v + off for v in c.f_set],
                }
                for c in self.components
            ],
            "proof_checks": (
                {
                    "all_hold": self.proof_checks.all_hold,
                    "threshold": self.proof_checks.threshold,
                    "per_component": list(self.proof_checks.per_component),
                }
                if self.proof_checks is not None
                else None
            ),
            "reason": self.reason,
        }


def _core_cross_degrees(
    g: Graph, comps: Sequence[CliqueComponent]
) -> list[tuple[int, list[int]]]:
    """Per component: core size plus each core vertex's neighbor count in
    the other cores."""
    f_masks = [sum(1 << v for v in c.f_set) for c in comps]
    union = 0
    for m in f_masks:
        union |= m
    out = []
    for i, comp in enumerate(comps):
        other = union & ~f_masks[i]
        cross = [(g.masks[v] & other).bit_count() for v in sorted(comp.f_set)]
        out.append((len(comp.f_set), cross))
    return out


def choose_k(comps: Sequence[CliqueComponent], g: Graph) -> int | None:
    """Smallest k >= 1 such that every core vertex has at most
    min(k, |core| - k) neighbors in the other cores; None when no k
    works (possible only when the size hypothesis fails), including the
    degenerate case of an empty core."""
    if not comps:
        raise ValueError("need at least one component")
    if any(not c.f_set for c in comps):
        return None
    data = _core_cross_degrees(g, comps)
    for k in range(1, max(size for size, _ in data) + 1):
        if all(
            cv <= min(k, size - k) for size, cross in data for cv in cross
        ):
            return k
    return None


def verify_hitting(g: Graph, s: frozenset[int] | set[int], cs: CliqueSet | None = None) -> HittingCheck:
    """True iff `s` is stable and intersects every maximum clique.

    On failure, reports one internal edge of s and up to ten missed
    cliques.
    """
    s = frozenset(s)
    for v in s:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range")
    if cs is None:
        cs = maximum_cliques(g)
    internal_edge = None
    for u in sorted(s):
        hit = s & g.adj[u]
        if hit:
            internal_edge = (u, min(hit))
            break
    missed = tuple(c for c in cs.cliques if not s.intersection(c))[:10]
    ok = internal_edge is None and not missed
    return HittingCheck(
        ok=ok,
        stable=internal_edge is None,
        internal_edge=internal_edge,
        missed_cliques=missed,
    )


def brute_force_hitting(
    g: Graph, limit: int = DEFAULT_BRUTE_LIMIT, cs: CliqueSet | None = None
) -> frozenset[int] | None:
    """Ground-truth oracle: search stable sets by increasing size for one
    meeting every maximum clique. None is a proof of non-existence.

    Any minimal hitting stable set has at most min(n, #cliques)
    vertices, so exhausting those sizes is a complete search. Guarded by
    `limit` on the vertex count.
    """
    if g.n > limit:
        raise BudgetExceededError(
            f"exhaustive hitting search allows n <= {limit}, got n = {g.n}"
        )
    if cs is None:
        cs = maximum_cliques(g)
    clique_masks = [sum(1 << v for v in c) for c in cs.cliques]
    adj = g.masks
    full = (1 << g.n) - 1

    def dfs(allowed: int, chosen: int, depth: int, start: int, size: int) -> int | None:
        if depth == size:
            if all(cm & chosen for cm in clique_masks):
                return chosen
            return None
        rest = allowed >> start << start
        for cm in clique_masks:
            if cm & chosen == 0 and cm & rest == 0:
                return None
        for v in _bits(rest):
            got = dfs(
                allowed & ~adj[v] & ~(1 << v), chosen | (1 << v), depth + 1, v + 1, size
            )
            if got is not None:
                return got
        return None

    for size in range(1, min(g.n, len(clique_masks)) + 1):
        got = dfs(full, 0, 0, 0, size)
        if got is not None:
            return frozenset(_bits(got))
    return None


def _proof_checks(g: Graph, comps: Sequence[CliqueComponent], delta: int) -> ProofChecks:
    t = Fraction(delta + 1, 3)
    data = _core_cross_degrees(g, comps)
    per = []
    all_hold = True
    for i, comp in enumerate(comps):
        f_size, cross = data[i]
        d_size = len(comp.d_set)
        f_large = Fraction(f_size) > t
        f_plus_d_large = Fraction(f_size + d_size) > 4 * t
        cap = min(t, Fraction(f_size) - t)
        cross_caps = all(Fraction(cv) < cap for cv in cross)
        ok = f_large and f_plus_d_large and cross_caps
        all_hold = all_hold and ok
        per.append(
            {
                "component": i,
                "f_size": f_size,
                "d_size": d_size,
                "max_cross": max(cross, default=0),
                "f_large": f_large,
                "f_plus_d_large": f_plus_d_large,
                "cross_caps": cross_caps,
            }
        )
    return ProofChecks(all_hold=all_hold, threshold=str(t), per_component=tuple(per))


def hitting_stable_set(
    g: Graph,
    clique_budget: int = DEFAULT_CLIQUE_BUDGET,
    isr_budget: int = DEFAULT_ISR_BUDGET,
    brute_limit: int = DEFAULT_BRUTE_LIMIT,
    k_override: int | None = None,
) -> HittingReport:
    """Find and verify a stable set meeting every maximum clique.

    Statuses: FOUND_UNDER_HYPOTHESIS / FOUND_WITHOUT_HYPOTHESIS carry a
    verified set; NONE_EXISTS_PROVEN records an exhaustive negative on a
    small graph; UNKNOWN means a budget or size guard stopped the run
    (see `reason`). When 3*omega > 2*(delta+1) holds, anything short of
    a verified set is an InvariantViolationError by construction.
    """
    if g.n == 0:
        raise ValueError("the pipeline requires at least one vertex")
    if k_override is not None and k_override < 1:
        raise ValueError("k_override must be at least 1")
    delta = g.max_degree()
    try:
        cs = maximum_cliques(g, clique_budget)
    except BudgetExceededError:
        return HittingReport(
            status=UNKNOWN,
            omega=None,
            delta=delta,
            hypothesis_met=None,
            components=(),
            chosen_k=None,
            stable_set=None,
            proof_checks=None,
            reason="clique enumeration budget exhausted",
        )
    omega = cs.omega
    hyp = hypothesis_met(omega, delta)
    comps = components(cs, clique_graph(cs))
    summaries = tuple(
        ComponentSummary(
            index=i,
            n_cliques=len(c.clique_indices),
            d_size=len(c.d_set),
            f_size=len(c.f_set),
            f_set=tuple(sorted(c.f_set)),
        )
        for i, c in enumerate(comps)
    )
    proof = _proof_checks(g, comps, delta) if hyp else None

    def report(status, chosen_k=None, s=None, reason=None):
        return HittingReport(
            status=status,
            omega=omega,
            delta=delta,
            hypothesis_met=hyp,
            components=summaries,
            chosen_k=chosen_k,
            stable_set=s,
            proof_checks=proof,
            reason=reason,
        )

    if all(c.f_set for c in comps):
        k = None
        if k_override is not None:
            data = _core_cross_degrees(g, comps)
            if all(
                cv <= min(k_override, size - k_override)
                for size, cross in data
                for cv in cross
            ):
                k = k_override
        if k is None:
            k = choose_k(comps, g)
        if k is not None:
            core_union = sorted(set().union(*(c.f_set for c in comps)))
            sub, old_ids = g.induced(core_union)
            to_new = {old: new for new, old in enumerate(old_ids)}
            sub_pg = PartitionedGraph(
                sub, [[to_new[v] for v in sorted(c.f_set)] for c in comps]
            )
            try:
                picks = find_isr_exact(sub_pg, node_budget=isr_budget)
            except BudgetExceededError:
                return report(UNKNOWN, reason="transversal search budget exhausted")
            if picks is None:
                raise InvariantViolationError(
                    "the degree caps hold on the component cores but no "
                    "transversal exists; this cannot happen"
                )
            s = frozenset(old_ids[p] for p in picks)
            check = verify_hitting(g, s, cs)
            if not check.ok:
                raise InvariantViolationError(
                    "pipeline output failed re-verification against the clique set"
                )
            return report(
                FOUND_UNDER_HYPOTHESIS if hyp else FOUND_WITHOUT_HYPOTHESIS,
                chosen_k=k,
                s=s,
            )
        if hyp:
            raise InvariantViolationError(
                "no integral degree cap exists although 3*omega > 2*(delta+1)"
            )
    elif hyp:
        raise InvariantViolationError(
            "a component core is empty although 3*omega > 2*(delta+1)"
        )

    if g.n <= brute_limit:
        s = brute_force_hitting(g, limit=brute_limit, cs=cs)
        if s is None:
            return report(NONE_EXISTS_PROVEN)
        check = verify_hitting(g, s, cs)
        if not check.ok:
            raise InvariantViolationError("oracle output failed re-verification")
        return report(FOUND_WITHOUT_HYPOTHESIS, s=s)
    return report(
        UNKNOWN, reason=f"n={g.n} exceeds the exhaustive-search limit {brute_limit}"
    )
