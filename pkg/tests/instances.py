"""Seeded instance builders and independent oracles shared by the tests.

Everything here is deterministic given a SplitMix64 stream, and the
oracles deliberately avoid the library's own search code paths.
"""

from itertools import product

from cliquehit import Graph, PartitionedGraph, SplitMix64, gen_random


def random_graph(rng: SplitMix64, n_lo: int, n_hi: int, probs) -> Graph:
    n = n_lo + rng.below(n_hi - n_lo + 1)
    p = probs[rng.below(len(probs))]
    return gen_random(n, p, rng.next_u64())


def lopsided_instance(rng: SplitMix64) -> tuple[PartitionedGraph, int]:
    """Stable-block partitioned graph engineered so that every vertex has
    at most min(k, |block| - k) cross neighbors for the returned k.

    Blocks: 2..7 of size k+1..8 with k in 1..3. Cross edges are added in
    a seeded shuffle while per-vertex cap allowances remain.
    """
    k = 1 + rng.below(3)
    r = 2 + rng.below(6)
    sizes = [k + 1 + rng.below(8 - k) for _ in range(r)]
    offsets = []
    n = 0
    for s in sizes:
        offsets.append(n)
        n += s
    block_of = [i for i, s in enumerate(sizes) for _ in range(s)]
    rem = [min(k, sizes[block_of[v]] - k) for v in range(n)]
    pairs = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if block_of[u] != block_of[v]
    ]
    for i in range(len(pairs) - 1, 0, -1):
        j = rng.below(i + 1)
        pairs[i], pairs[j] = pairs[j], pairs[i]
    edges = []
    for u, v in pairs:
        if rem[u] > 0 and rem[v] > 0 and rng.below(100) < 60:
            edges.append((u, v))
            rem[u] -= 1
            rem[v] -= 1
    g = Graph(n, edges)
    blocks = [range(offsets[i], offsets[i] + sizes[i]) for i in range(r)]
    return PartitionedGraph(g, blocks), k


def small_partitioned(rng: SplitMix64, r_hi: int = 5, size_hi: int = 3) -> PartitionedGraph:
    """Random stable-block partitioned graph at certificate scale."""
    r = 2 + rng.below(r_hi - 1)
    sizes = [1 + rng.below(size_hi) for _ in range(r)]
    offsets = []
    n = 0
    for s in sizes:
        offsets.append(n)
        n += s
    block_of = [i for i, s in enumerate(sizes) for _ in range(s)]
    percent = (30, 50, 70)[rng.below(3)]
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if block_of[u] != block_of[v] and rng.below(100) < percent
    ]
    g = Graph(n, edges)
    blocks = [range(offsets[i], offsets[i] + sizes[i]) for i in range(r)]
    return PartitionedGraph(g, blocks)


def cartesian_isr(pg: PartitionedGraph, pinned: int | None = None):
    """Plain cartesian-product ISR oracle; no pruning, no shared code."""
    for combo in product(*[sorted(b) for b in pg.blocks]):
        if pinned is not None and pinned not in combo:
            continue
        ok = True
        for i in range(len(combo)):
            for j in range(i + 1, len(combo)):
                if pg.graph.has_edge(combo[i], combo[j]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return combo
    return None


def subset_max_cliques(g: Graph):
    """All-subsets maximum-clique oracle (n <= 20 or so).

    Dynamic programming over every vertex subset: a set is a clique iff
    dropping its lowest vertex leaves a clique contained in that
    vertex's neighborhood.
    """
    n = g.n
    masks = g.masks
    is_clique = bytearray(1 << n)
    is_clique[0] = 1
    best = 0
    found: list[int] = []
    for m in range(1, 1 << n):
        low = (m & -m).bit_length() - 1
        rest = m & (m - 1)
        if is_clique[rest] and rest & ~masks[low] == 0:
            is_clique[m] = 1
            c = m.bit_count()
            if c > best:
                best = c
                found = []
            if c == best:
                found.append(m)
    out = []
    for m in found:
        verts = []
        while m:
            verts.append((m & -m).bit_length() - 1)
            m &= m - 1
        out.append(tuple(verts))
    return sorted(out)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
