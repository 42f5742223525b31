"""Independent systems of representatives on partitioned graphs.

An ISR picks one vertex per block so that the picks are pairwise
non-adjacent. This module provides the per-vertex degree-cap check that
guarantees an ISR through any pinned vertex, an exact backtracking
solver, an augmentation-style solver that either finds a pinned ISR or
emits a structured domination certificate of non-existence, a verifier
and exhaustive finder for such certificates, and a numeric audit of the
degree-sum argument that rules certificates out under the caps.

Certificates follow the stable-set reading of blocks: a certificate is
a pair of disjoint stable sets X (containing the pinned vertex) and Y
(a partial ISR of the blocks indexed by J) such that every vertex of Y
has exactly one neighbor in X and X together with Y totally dominates
V_J plus the pinned vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import BudgetExceededError, InvariantViolationError
from .graphs import Graph, PartitionedGraph

DEFAULT_ISR_BUDGET = 10_000_000
DEFAULT_AUG_BUDGET = 1_000_000
DEFAULT_CERT_BUDGET = 10_000_000

ISR_FOUND = "isr"
CERTIFICATE_FOUND = "certificate"
BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class LopsidedReport:
    """Outcome of the per-vertex cross-block degree-cap check.

    For a vertex in a block of size s the cap is min(k, s - k); the
    check counts neighbors outside the vertex's own block, which equals
    full degree when blocks are stable sets.
    """

    k: int
    holds: bool
    violations: tuple[tuple[int, int, int], ...]  # (vertex, out_degree, cap)


@dataclass(frozen=True)
class DominationCertificate:
    """Witness that no ISR through `pinned` exists.

    j_set holds block indices (the pinned vertex's block never appears),
    x_set and y_set the two stable halves of the dominating set.
    """

    j_set: frozenset[int]
    x_set: frozenset[int]
    y_set: frozenset[int]
    pinned: int


@dataclass(frozen=True)
class CertificateCheck:
    """Per-condition breakdown produced by verify_certificate."""

    ok: bool
    conditions: dict

    def failed(self) -> list[str]:
        return [name for name, good in self.conditions.items() if not good]


@dataclass(frozen=True)
class AugmentationState:
    """Inspection snapshot surfaced when the augmenting solver runs out
    of budget: the pinned-side stable set built so far, the accumulated
    blocked picks, the latest transversal of the other blocks, and the
    per-round blocked-pick sets."""

    x_list: tuple[int, ...]
    y_accum: frozenset[int]
    current_isr: tuple[tuple[int, int], ...]  # (block, vertex) pairs
    y_prime_history: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class AugmentResult:
    status: str  # ISR_FOUND | CERTIFICATE_FOUND | BUDGET_EXHAUSTED
    isr: tuple[int, ...] | None = None
    certificate: DominationCertificate | None = None
    state: AugmentationState | None = None
    nodes: int = 0
    trace: tuple[dict, ...] | None = None


@dataclass(frozen=True)
class BoundAudit:
    """Degree sums of a (possibly fabricated) certificate against the
    caps implied by the lopsided condition.

    Under the caps, sum(d(v) for v in X) <= k*|J| and the Y sum is at
    most sum(|V_i| - k), so the total is at most sum(|V_i|); total
    domination of V_J plus the pinned vertex would force strictly more,
    which is the numeric contradiction this report lays out. Degrees are
    full-graph degrees, i.e. the stable-block reading.
    """

    k: int
    j_size: int
    block_sum: int
    x_degree_sum: int
    x_cap: int
    y_degree_sum: int
    y_cap: int
    d_degree_sum: int
    domination_requires: int
    x_within_cap: bool
    y_within_cap: bool
    d_within_block_sum: bool
    totally_dominates: bool
    lopsided_holds: bool
    gap: int


class _Budget:
    __slots__ = ("budget", "nodes", "label")

    def __init__(self, budget: int, label: str):
        self.budget = budget
        self.nodes = 0
        self.label = label

    def tick(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.nodes > self.budget:
            raise BudgetExceededError(
                f"{self.label} exceeded {self.budget} nodes", nodes=self.nodes
            )


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


def lopsided_check(pg: PartitionedGraph, k: int) -> LopsidedReport:
    """Check every vertex against the cap min(k, |own block| - k) on its
    cross-block neighbor count. Blocks smaller than k make the cap
    negative, so any of their vertices violate."""
    if k < 1:
        raise ValueError("k must be at least 1")
    g = pg.graph
    violations = []
    for i, block in enumerate(pg.blocks):
        cap = min(k, len(block) - k)
        bmask = pg.block_masks[i]
        for v in sorted(block):
            out = (g.masks[v] & ~bmask).bit_count()
            if out > cap:
                violations.append((v, out, cap))
    return LopsidedReport(k=k, holds=not violations, violations=tuple(violations))


# ---------------------------------------------------------------------------
# Exact search


def _min_cost_isr(
    adj: Sequence[int],
    items: Sequence[tuple[int, int]],
    cost_mask: int,
    budget: _Budget,
    seed: tuple[dict, int] | None = None,
) -> tuple[dict, int] | None:
    """Exhaustive branch-and-bound for a transversal of `items` (pairs of
    block id and candidate mask) minimizing picks inside `cost_mask`.

    Deterministic: blocks in ascending (candidate count, block id) order,
    candidates outside cost_mask first, ascending vertex id within each
    group. Forward checking prunes emptied blocks; a zero-cost solution
    stops the search immediately. Returns ({block: vertex}, cost) for the
    minimum, or None when no transversal exists at all. `seed` primes the
    incumbent with a known feasible solution.
    """
    order = sorted(range(len(items)), key=lambda t: (items[t][1].bit_count(), items[t][0]))
    blocks = [items[t] for t in order]
    m = len(blocks)
    best_cost: int | None = None
    best_picks: dict | None = None
    if seed is not None:
        best_picks, best_cost = dict(seed[0]), seed[1]
    picks = [0] * m

    def dfs(level: int, avail: list[int], cost: int) -> None:
        nonlocal best_cost, best_picks
        if best_cost == 0:
            return
        if best_cost is not None and cost >= best_cost:
            return
        if level == m:
            best_cost = cost
            best_picks = {blocks[t][0]: picks[t] for t in range(m)}
            return
        lb = cost
        for j in range(level, m):
            a = avail[j]
            if a == 0:
                return
            if a & ~cost_mask == 0:
                lb += 1
        if best_cost is not None and lb >= best_cost:
            return
        a = avail[level]
        for v in list(_bits(a & ~cost_mask)) + list(_bits(a & cost_mask)):
            budget.tick()
            picks[level] = v
            child = avail[:]
            nb = adj[v]
            for j in range(level + 1, m):
                child[j] &= ~nb
            dfs(level + 1, child, cost + (1 if (cost_mask >> v) & 1 else 0))
            if best_cost == 0:
                return

    dfs(0, [mask for _b, mask in blocks], 0)
    if best_picks is None:
        return None
    return best_picks, best_cost


def find_isr_for_blocks(
    g: Graph,
    blocks: Sequence[Iterable[int]],
    pinned: int | None = None,
    node_budget: int = DEFAULT_ISR_BUDGET,
) -> dict | None:
    """Exact ISR search over an arbitrary block family of g (the family
    need not cover the graph). Returns {block index: vertex} or None."""
    items = []
    pin_block = None
    norm = [frozenset(b) for b in blocks]
    if pinned is not None:
        for i, b in enumerate(norm):
            if pinned in b:
                pin_block = i
                break
        if pin_block is None:
            raise ValueError(f"pinned vertex {pinned} lies in no block")
    for i, b in enumerate(norm):
        if not b:
            raise ValueError(f"block {i} is empty")
        mask = sum(1 << v for v in b)
        if i == pin_block:
            mask = 1 << pinned
        items.append((i, mask))
    budget = _Budget(node_budget, "transversal search")
    res = _min_cost_isr(g.masks, items, 0, budget)
    if res is None:
        return None
    return res[0]


def find_isr_exact(
    pg: PartitionedGraph,
    pinned: int | None = None,
    node_budget: int = DEFAULT_ISR_BUDGET,
) -> tuple[int, ...] | None:
    """Complete backtracking search for an ISR, optionally through a
    pinned vertex. Returns picks indexed by block, or None only when a
    full search proves non-existence (budget overruns raise instead)."""
    if pinned is not None and not (0 <= pinned < pg.graph.n):
        raise ValueError(f"pinned vertex {pinned} out of range")
    res = find_isr_for_blocks(pg.graph, pg.blocks, pinned, node_budget)
    if res is None:
        return None
    picks = tuple(res[b] for b in range(pg.r))
    _assert_isr(pg, picks, pinned)
    return picks


def _assert_isr(pg: PartitionedGraph, picks: tuple[int, ...], pinned: int | None) -> None:
    if len(picks) != pg.r:
        raise InvariantViolationError("transversal does not cover every block")
    for b, v in enumerate(picks):
        if v not in pg.blocks[b]:
            raise InvariantViolationError(f"pick {v} is not in block {b}")
    for i in range(len(picks)):
        for j in range(i + 1, len(picks)):
            if pg.graph.has_edge(picks[i], picks[j]):
                raise InvariantViolationError(
                    f"picks {picks[i]} and {picks[j]} are adjacent"
                )
    if pinned is not None and pinned not in picks:
        raise InvariantViolationError("pinned vertex missing from transversal")


# ---------------------------------------------------------------------------
# Certificates


def verify_certificate(pg: PartitionedGraph, cert: DominationCertificate) -> CertificateCheck:
    """Check every defining condition of a domination certificate and
    report which fail. A failing certificate is a False result, not an
    error."""
    g = pg.graph
    for v in cert.x_set | cert.y_set | {cert.pinned}:
        if not (0 <= v < g.n):
            raise ValueError(f"certificate vertex {v} out of range")
    for b in cert.j_set:
        if not (0 <= b < pg.r):
            raise ValueError(f"certificate block {b} out of range")

    x_mask = sum(1 << v for v in cert.x_set)
    y_mask = sum(1 << v for v in cert.y_set)
    vj_mask = sum(pg.block_masks[b] for b in cert.j_set)
    dom_mask = x_mask | y_mask
    target_mask = vj_mask | (1 << cert.pinned)

    def stable(mask: int) -> bool:
        return all(g.masks[v] & mask == 0 for v in _bits(mask))

    per_block_ok = all(
        (y_mask & pg.block_masks[b]).bit_count() <= 1 for b in range(pg.r)
    )
    conditions = {
        "disjoint": not (cert.x_set & cert.y_set),
        "x_stable": stable(x_mask),
        "y_stable": stable(y_mask),
        "y_partial_isr": (y_mask & ~vj_mask) == 0 and per_block_ok,
        "y_size_le_j": len(cert.y_set) <= len(cert.j_set),
        "y_unique_x_neighbor": all(
            (g.masks[y] & x_mask).bit_count() == 1 for y in cert.y_set
        ),
        "x_size_le_y": len(cert.x_set) <= len(cert.y_set),
        "pinned_in_x": cert.pinned in cert.x_set,
        "d_contained": (dom_mask & ~target_mask) == 0,
        "total_domination": all(
            g.masks[u] & dom_mask for u in _bits(target_mask)
        ),
    }
    return CertificateCheck(ok=all(conditions.values()), conditions=conditions)


def _lex_subsets(pool: Sequence[int], max_size: int):
    """Subsets of `pool` with at most max_size elements, the empty set
    first, then in lexicographic order of their sorted tuples."""
    pool = sorted(pool)

    def rec(prefix: list[int], start: int):
        yield tuple(prefix)
        if len(prefix) == max_size:
            return
        for idx in range(start, len(pool)):
            prefix.append(pool[idx])
            yield from rec(prefix, idx + 1)
            prefix.pop()

    yield from rec([], 0)


def find_certificate_exact(
    pg: PartitionedGraph,
    pinned: int,
    node_budget: int = DEFAULT_CERT_BUDGET,
) -> DominationCertificate | None:
    """Exhaustive canonical search for a domination certificate.

    Block subsets J are visited by size then lexicographically; X and Y
    candidates in lexicographic order of their sorted vertex tuples. The
    first valid certificate is returned. Intended for small instances;
    the node budget guards the exponential blow-up.
    """
    g = pg.graph
    if not (0 <= pinned < g.n):
        raise ValueError(f"pinned vertex {pinned} out of range")
    pin_block = pg.block_of(pinned)
    others = [b for b in range(pg.r) if b != pin_block]
    budget = _Budget(node_budget, "certificate search")
    pin_bit = 1 << pinned

    for jsize in range(1, len(others) + 1):
        for j_tuple in combinations(others, jsize):
            vj_mask = sum(pg.block_masks[b] for b in j_tuple)
            vj_list = sorted(_bits(vj_mask))
            target_mask = vj_mask | pin_bit
            # X = {pinned} plus a stable extension inside V_J avoiding
            # N(pinned); |X| <= |J|.
            x_pool = [v for v in vj_list if not (g.masks[pinned] >> v) & 1]
            for x_extra in _lex_subsets(x_pool, jsize - 1):
                x_mask = pin_bit + sum(1 << v for v in x_extra)
                budget.tick()
                if any(g.masks[v] & x_mask for v in x_extra):
                    continue  # not stable
                x_size = len(x_extra) + 1
                # Vertices Y must cover: everything X leaves undominated.
                need = [u for u in _bits(target_mask) if g.masks[u] & x_mask == 0]
                w_pool = [
                    v
                    for v in vj_list
                    if not (x_mask >> v) & 1
                    and (g.masks[v] & x_mask).bit_count() == 1
                ]
                w_mask = sum(1 << v for v in w_pool)
                if any(g.masks[u] & w_mask == 0 for u in need):
                    continue
                for y_tuple in _lex_subsets(w_pool, jsize):
                    if len(y_tuple) < x_size:
                        continue
                    budget.tick()
                    y_mask = sum(1 << v for v in y_tuple)
                    if any(g.masks[v] & y_mask for v in y_tuple):
                        continue  # not stable
                    if any(
                        (y_mask & pg.block_masks[b]).bit_count() > 1 for b in j_tuple
                    ):
                        continue
                    if any(g.masks[u] & (x_mask | y_mask) == 0 for u in need):
                        continue
                    return DominationCertificate(
                        j_set=frozenset(j_tuple),
                        x_set=frozenset([pinned, *x_extra]),
                        y_set=frozenset(y_tuple),
                        pinned=pinned,
                    )
    return None


def theorem4_bound_audit(
    pg: PartitionedGraph, k: int, cert: DominationCertificate
) -> BoundAudit:
    """Lay out the degree-sum chain for a certificate under cap k."""
    g = pg.graph
    j_list = sorted(cert.j_set)
    block_sum = sum(len(pg.blocks[b]) for b in j_list)
    x_degree_sum = sum(g.degree(v) for v in cert.x_set)
    y_degree_sum = sum(g.degree(v) for v in cert.y_set)
    d_degree_sum = x_degree_sum + y_degree_sum
    x_cap = k * len(j_list)
    y_cap = sum(len(pg.blocks[b]) - k for b in j_list)
    check = verify_certificate(pg, cert)
    return BoundAudit(
        k=k,
        j_size=len(j_list),
        block_sum=block_sum,
        x_degree_sum=x_degree_sum,
        x_cap=x_cap,
        y_degree_sum=y_degree_sum,
        y_cap=y_cap,
        d_degree_sum=d_degree_sum,
        domination_requires=block_sum + 1,
        x_within_cap=x_degree_sum <= x_cap,
        y_within_cap=y_degree_sum <= y_cap,
        d_within_block_sum=d_degree_sum <= block_sum,
        totally_dominates=check.conditions["total_domination"],
        lopsided_holds=lopsided_check(pg, k).holds,
        gap=block_sum - d_degree_sum,
    )


# ---------------------------------------------------------------------------
# Augmenting solver


def find_isr_augmenting(
    pg: PartitionedGraph,
    pinned: int,
    budget: int = DEFAULT_AUG_BUDGET,
    trace: bool = False,
) -> AugmentResult:
    """Constructive pinned-ISR search by repeated constrained re-solving.

    The pinned vertex's block is moved last internally. The solver keeps
    a stable set X (starting at the pinned vertex) and, per member x_j, a
    frozen set Y'_j of transversal picks adjacent to x_j. Each round it
    re-solves for a transversal R of the other blocks that meets N(x_j)
    exactly in Y'_j for all earlier j while minimizing |R & N(x_i)| for
    the newest x_i:

    * cost 0 at the pinned vertex itself means R avoids all its
      neighbors, so R plus the pinned vertex is the answer;
    * cost 0 deeper in the sequence triggers the exchange step: the new
      pick replaces the transversal's vertex in its own block, proving
      the earlier minimum Y'_j was improvable, so the sequence is cut
      back to j and re-minimized from the improved incumbent;
    * otherwise Y'_i is recorded, and the next x is the lowest-id vertex
      in the blocks touched by the accumulated Y with no neighbor in
      X or Y. When no such vertex exists, X and Y totally dominate those
      blocks plus the pinned vertex, which is exactly a domination
      certificate, and it is returned.

    Requires the blocks other than the pinned one to admit an ISR
    (ValueError otherwise). On budget exhaustion the partial state is
    attached to the result instead of raising.
    """
    g = pg.graph
    adj = g.masks
    if not (0 <= pinned < g.n):
        raise ValueError(f"pinned vertex {pinned} out of range")
    pin_block = pg.block_of(pinned)
    base = [(b, pg.block_masks[b]) for b in range(pg.r) if b != pin_block]
    budget_ctr = _Budget(budget, "augmenting search")
    trace_log: list[dict] | None = [] if trace else None

    xs: list[int] = [pinned]
    yps: list[int] = []  # masks, one per completed round
    last_picks: dict = {}

    def state_snapshot() -> AugmentationState:
        return AugmentationState(
            x_list=tuple(xs),
            y_accum=frozenset(v for m in yps for v in _bits(m)),
            current_isr=tuple(sorted(last_picks.items())),
            y_prime_history=tuple(frozenset(_bits(m)) for m in yps),
        )

    def result_isr(picks: dict) -> AugmentResult:
        full = dict(picks)
        full[pin_block] = pinned
        isr = tuple(full[b] for b in range(pg.r))
        _assert_isr(pg, isr, pinned)
        return AugmentResult(
            status=ISR_FOUND,
            isr=isr,
            nodes=budget_ctr.nodes,
            trace=tuple(trace_log) if trace_log is not None else None,
        )

    try:
        if _min_cost_isr(adj, base, 0, budget_ctr) is None:
            raise ValueError(
                "the blocks other than the pinned vertex's block admit no ISR"
            )

        seed: tuple[dict, int] | None = None
        while True:
            i = len(xs) - 1  # index of the x awaiting (re-)minimization
            forced = 0
            forbidden = 0
            for j in range(i):
                forced |= yps[j]
                forbidden |= adj[xs[j]] & ~yps[j]
            if forced & forbidden:
                raise InvariantViolationError("frozen pick is also excluded")
            items = []
            for b, mask in base:
                fb = forced & mask
                cand = fb if fb else mask & ~forbidden
                items.append((b, cand))
            res = _min_cost_isr(adj, items, adj[xs[i]], budget_ctr, seed=seed)
            seed = None
            if res is None:
                raise InvariantViolationError("constrained search lost feasibility")
            picks, cost = res
            last_picks = picks
            picks_mask = sum(1 << v for v in picks.values())

            if cost == 0:
                if i == 0:
                    return result_isr(picks)
                # Exchange step: the pick in x_i's block belongs to some
                # earlier Y'_j; swapping x_i for it improves round j.
                bx = pg.block_of(xs[i])
                bx_mask = pg.block_masks[bx]
                hits = [j for j in range(i) if yps[j] & bx_mask]
                if len(hits) != 1:
                    raise InvariantViolationError("exchange block is not unique")
                j = hits[0]
                swapped = dict(picks)
                swapped[bx] = xs[i]
                swapped_mask = picks_mask & ~bx_mask | (1 << xs[i])
                new_cost = (swapped_mask & adj[xs[j]]).bit_count()
                if new_cost >= yps[j].bit_count():
                    raise InvariantViolationError("exchange did not improve the round")
                if trace_log is not None:
                    trace_log.append({"event": "exchange", "cut_to": j})
                xs = xs[: j + 1]
                yps = yps[:j]
                seed = (swapped, new_cost)
                continue

            ypi = picks_mask & adj[xs[i]]
            yps.append(ypi)
            if trace_log is not None:
                trace_log.append(
                    {
                        "event": "round",
                        "x": xs[i],
                        "y_prime": sorted(_bits(ypi)),
                        "isr": dict(sorted(picks.items())),
                    }
                )

            y_mask = 0
            for m in yps:
                y_mask |= m
            x_mask = sum(1 << v for v in xs)
            dom = x_mask | y_mask
            touched = [b for b, mask in base if mask & y_mask]
            x_new = None
            elig = sum(pg.block_masks[b] for b in touched)
            for v in _bits(elig):
                budget_ctr.tick()
                if adj[v] & dom == 0:
                    x_new = v
                    break
            if x_new is None:
                cert = DominationCertificate(
                    j_set=frozenset(touched),
                    x_set=frozenset(xs),
                    y_set=frozenset(_bits(y_mask)),
                    pinned=pinned,
                )
                return AugmentResult(
                    status=CERTIFICATE_FOUND,
                    certificate=cert,
                    nodes=budget_ctr.nodes,
                    trace=tuple(trace_log) if trace_log is not None else None,
                )
            if (dom >> x_new) & 1:
                raise InvariantViolationError("chosen x already lies in X or Y")
            xs.append(x_new)
    except BudgetExceededError:
        return AugmentResult(
            status=BUDGET_EXHAUSTED,
            state=state_snapshot(),
            nodes=budget_ctr.nodes,
            trace=tuple(trace_log) if trace_log is not None else None,
        )
