"""Graphs, vertex partitions, file formats, and instance generators.

Vertices are dense 0-based integers internally. All file formats speak
1-based ids at the boundary, matching the DIMACS convention.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class DimacsError(ValueError):
    """Malformed DIMACS input. `line_no` is 1-based when known."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DimacsHeaderError(DimacsError):
    """The 'p edge <n> <m>' line is malformed or duplicated."""


class DimacsMissingHeaderError(DimacsError):
    """An edge line appeared before the 'p' line, or no 'p' line exists."""


class DimacsRangeError(DimacsError):
    """An edge endpoint lies outside 1..n."""


class DimacsSelfLoopError(DimacsError):
    """An edge line joins a vertex to itself."""


class PartitionError(ValueError):
    """Malformed partition file. `line_no` is 1-based when known."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class Graph:
    """Undirected simple graph on vertices 0..n-1, immutable once built.

    Adjacency is kept twice: as frozensets (`adj`) for readable code and
    as int bitmasks (`masks`) for the solvers. Symmetry and absence of
    self-loops are enforced at construction; duplicate edges collapse.
    """

    __slots__ = ("n", "adj", "masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        tmp: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            tmp[u].add(v)
            tmp[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in tmp)
        self.masks: tuple[int, ...] = tuple(
            sum(1 << w for w in s) for s in self.adj
        )

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph plus the sorted old-id of each new vertex."""
        keep = sorted(set(vertices))
        for v in keep:
            if not (0 <= v < self.n):
                raise ValueError(f"vertex {v} out of range")
        index = {old: new for new, old in enumerate(keep)}
        edges = [
            (index[u], index[v])
            for u in keep
            for v in self.adj[u]
            if u < v and v in index
        ]
        return Graph(len(keep), edges), tuple(keep)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class PartitionedGraph:
    """A graph together with an ordered partition of its vertices.

    The blocks must be nonempty, pairwise disjoint, and cover every
    vertex exactly once. Whether blocks must additionally be cliques or
    stable sets is a per-consumer contract, not enforced here.
    """

    __slots__ = ("graph", "blocks", "block_masks", "_owner")

    def __init__(self, graph: Graph, blocks: Sequence[Iterable[int]]):
        norm = tuple(frozenset(b) for b in blocks)
        owner: dict[int, int] = {}
        for i, block in enumerate(norm):
            if not block:
                raise ValueError(f"block {i} is empty")
            for v in block:
                if not (0 <= v < graph.n):
                    raise ValueError(f"block {i} contains out-of-range vertex {v}")
                if v in owner:
                    raise ValueError(f"vertex {v} appears in blocks {owner[v]} and {i}")
                owner[v] = i
        if len(owner) != graph.n:
            missing = sorted(set(range(graph.n)) - owner.keys())
            raise ValueError(f"blocks do not cover vertices {missing[:10]}")
        self.graph = graph
        self.blocks: tuple[frozenset[int], ...] = norm
        self.block_masks: tuple[int, ...] = tuple(
            sum(1 << v for v in b) for b in norm
        )
        self._owner = owner

    @property
    def r(self) -> int:
        return len(self.blocks)

    def block_of(self, v: int) -> int:
        return self._owner[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartitionedGraph):
            return NotImplemented
        return self.graph == other.graph and self.blocks == other.blocks

    def __repr__(self) -> str:
        sizes = ",".join(str(len(b)) for b in self.blocks)
        return f"PartitionedGraph(n={self.graph.n}, blocks=[{sizes}])"


# ---------------------------------------------------------------------------
# DIMACS edge format


def parse_dimacs(text: str | bytes) -> Graph:
    """Parse DIMACS edge format: 'c' comments, one 'p edge n m' header,
    then 'e u v' lines with 1-based endpoints.

    Duplicate edge lines are tolerated; the header's edge count is
    advisory and not validated against the body.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise DimacsHeaderError("duplicate 'p' line", line_no)
            if len(fields) != 4 or fields[1] != "edge":
                raise DimacsHeaderError(f"malformed header {line!r}", line_no)
            try:
                n, _m = int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsHeaderError(f"non-integer counts in {line!r}", line_no) from None
            if n < 0:
                raise DimacsHeaderError(f"negative vertex count in {line!r}", line_no)
        elif fields[0] == "e":
            if n is None:
                raise DimacsMissingHeaderError("edge before 'p' line", line_no)
            if len(fields) != 3:
                raise DimacsError(f"malformed edge line {line!r}", line_no)
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise DimacsError(f"non-integer endpoint in {line!r}", line_no) from None
            if u == v:
                raise DimacsSelfLoopError(f"self-loop at vertex {u}", line_no)
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise DimacsRangeError(f"endpoint out of range in {line!r}", line_no)
            edges.append((u - 1, v - 1))
        else:
            raise DimacsError(f"unrecognized line {line!r}", line_no)
    if n is None:
        raise DimacsMissingHeaderError("no 'p edge' line found")
    return Graph(n, edges)


def emit_dimacs(g: Graph) -> str:
    """Canonical DIMACS text: header then edges sorted with u < v, 1-based.

    parse_dimacs(emit_dimacs(g)) reconstructs g exactly.
    """
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Partition files: one line per block, space-separated 1-based vertex ids.


def parse_partition(text: str | bytes, graph: Graph) -> PartitionedGraph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    blocks: list[list[int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        block: list[int] = []
        for tok in line.split():
            try:
                v = int(tok)
            except ValueError:
                raise PartitionError(f"non-integer vertex id {tok!r}", line_no) from None
            if not (1 <= v <= graph.n):
                raise PartitionError(f"vertex id {v} out of range 1..{graph.n}", line_no)
            block.append(v - 1)
        if len(set(block)) != len(block):
            raise PartitionError("repeated vertex inside a block", line_no)
        blocks.append(block)
    try:
        return PartitionedGraph(graph, blocks)
    except ValueError as exc:
        raise PartitionError(str(exc)) from None


def emit_partition(pg: PartitionedGraph) -> str:
    lines = [" ".join(str(v + 1) for v in sorted(b)) for b in pg.blocks]
    return "\n".join(lines) + "\n"


def emit_dimacs_with_blocks(pg: PartitionedGraph) -> str:
    """DIMACS text with the partition mirrored as 'c block ...' comments.

    The comments are ignored by any DIMACS parser but let a partitioned
    instance travel through a single pipe; parse_embedded_partition
    recovers the blocks.
    """
    body = emit_dimacs(pg.graph)
    comments = "".join(
        "c block " + " ".join(str(v + 1) for v in sorted(b)) + "\n"
        for b in pg.blocks
    )
    return comments + body


def parse_embedded_partition(text: str | bytes, graph: Graph) -> PartitionedGraph | None:
    """Recover blocks from 'c block ...' comment lines, if any."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    block_lines = []
    for raw in text.splitlines():
        fields = raw.split()
        if len(fields) >= 3 and fields[0] == "c" and fields[1] == "block":
            block_lines.append(" ".join(fields[2:]))
    if not block_lines:
        return None
    return parse_partition("\n".join(block_lines), graph)


# ---------------------------------------------------------------------------
# DOT export (visual debugging only; not canonicalized)


def to_dot(
    g: Graph,
    blocks: Sequence[Iterable[int]] | None = None,
    node_colors: dict[int, str] | None = None,
    name: str = "G",
) -> str:
    out = [f"graph {name} {{"]
    if node_colors:
        out.append("  node [style=filled];")
    seen: set[int] = set()
    if blocks:
        for i, block in enumerate(blocks):
            out.append(f"  subgraph cluster_{i} {{")
            out.append(f'    label="block {i + 1}";')
            for v in sorted(block):
                out.append(f"    {_dot_node(v, node_colors)};")
                seen.add(v)
            out.append("  }")
    for v in range(g.n):
        if v not in seen:
            out.append(f"  {_dot_node(v, node_colors)};")
    for u, v in g.edges():
        out.append(f"  v{u + 1} -- v{v + 1};")
    out.append("}")
    return "\n".join(out) + "\n"


def _dot_node(v: int, node_colors: dict[int, str] | None) -> str:
    if node_colors and v in node_colors:
        return f'v{v + 1} [fillcolor="{node_colors[v]}"]'
    return f"v{v + 1}"


# ---------------------------------------------------------------------------
# Deterministic PRNG (splitmix64) so seeded instances reproduce bit-exactly
# on any platform or implementation.

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """splitmix64: 64-bit state, one addition plus two xor-multiply mixes
    per draw. Constants are the reference ones; the stream for a given
    seed is fixed forever.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw in [0, bound), bias-free via rejection."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % bound

    def chance(self, prob: float | Fraction) -> bool:
        frac = Fraction(prob)
        threshold = (frac.numerator << 64) // frac.denominator
        return self.next_u64() < threshold


# ---------------------------------------------------------------------------
# Instance generators


def gen_random(n: int, edge_prob: float | Fraction, seed: int) -> Graph:
    """Seeded Erdos-Renyi style graph, identical for identical arguments.

    Pairs (u, v) with u < v are visited in lexicographic order; each
    consumes one splitmix64 draw, and the edge is present when the draw
    falls below floor(edge_prob * 2^64).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    frac = Fraction(edge_prob)
    if frac < 0 or frac > 1:
        raise ValueError("edge_prob must lie in [0, 1]")
    threshold = (frac.numerator << 64) // frac.denominator
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_u64() < threshold:
                edges.append((u, v))
    return Graph(n, edges)


def gen_blown_up_cycle(cycle_len: int, k: int) -> Graph:
    """Cycle of length `cycle_len` with every vertex replaced by a clique
    of size k; consecutive cliques are completely joined.

    For cycle_len = 5 the result has clique number 2k and maximum degree
    3k - 1, so 3 * omega equals 2 * (delta + 1) exactly.
    """
    if cycle_len < 3:
        raise ValueError("cycle_len must be at least 3")
    if k < 1:
        raise ValueError("k must be at least 1")
    n = cycle_len * k
    edges = []
    for c in range(cycle_len):
        blob = range(c * k, (c + 1) * k)
        for i in blob:
            for j in blob:
                if i < j:
                    edges.append((i, j))
        nxt = range(((c + 1) % cycle_len) * k, ((c + 1) % cycle_len + 1) * k)
        for i in blob:
            for j in nxt:
                edges.append((i, j))
    return Graph(n, edges)


def gen_haxell_gadget() -> PartitionedGraph:
    """The ratio-1/2 counterexample: one block of four vertices and four
    blocks of two, where the i-th big-block vertex is joined to both
    vertices of small block i. Every vertex has degree exactly half its
    own block size, yet no transversal of the blocks is a stable set.
    """
    edges = []
    for i in range(4):
        a = i
        small = (4 + 2 * i, 5 + 2 * i)
        edges.append((a, small[0]))
        edges.append((a, small[1]))
    g = Graph(12, edges)
    blocks = [
        [0, 1, 2, 3],
        [4, 5],
        [6, 7],
        [8, 9],
        [10, 11],
    ]
    return PartitionedGraph(g, blocks)


def gen_linked_cliques(q: int, t: int, matching: bool) -> Graph:
    """t disjoint complete graphs K_q; with `matching`, consecutive
    cliques are paired off (0 with 1, 2 with 3, ...) and joined by a
    perfect matching, so every vertex gains at most one cross edge.

    Clique number stays q; maximum degree is q with the matching and
    q - 1 without.
    """
    if q < 2:
        raise ValueError("q must be at least 2")
    if t < 2:
        raise ValueError("t must be at least 2")
    edges = []
    for c in range(t):
        base = c * q
        for i in range(q):
            for j in range(i + 1, q):
                edges.append((base + i, base + j))
    if matching:
        for c in range(0, t - 1, 2):
            for j in range(q):
                edges.append((c * q + j, (c + 1) * q + j))
    return Graph(t * q, edges)
