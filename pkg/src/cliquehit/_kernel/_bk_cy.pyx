# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled maximum-clique enumeration kernel over multi-word bitsets.

Mirrors bk_py exactly: same pivot rule, branch order, size-bound prune,
and budget accounting, so both backends return identical clique lists.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

from cliquehit.errors import BudgetExceededError

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

NAME = "cython"


cdef class _Ctx:
    cdef u64 *adj        # n rows of nwords words
    cdef u64 *arena      # (n + 2) levels of 3 * nwords words: P, X, branch
    cdef int *stack      # vertices of the current recursion path
    cdef int n, nwords, best
    cdef long long nodes, budget
    cdef list out

    def __dealloc__(self):
        if self.adj != NULL:
            free(self.adj)
        if self.arena != NULL:
            free(self.arena)
        if self.stack != NULL:
            free(self.stack)


cdef int _expand(_Ctx c, int depth):
    # Returns 1 when the node budget is exhausted, else 0.
    cdef int W = c.nwords
    cdef u64 *P = c.arena + (<size_t>depth * 3) * W
    cdef u64 *X = P + W
    cdef u64 *B = X + W
    cdef u64 *P1
    cdef u64 *X1
    cdef u64 *row
    cdef u64 w
    cdef int i, j, b, u, v, cnt, pc, xnz
    cdef int pivot, pivot_cnt

    c.nodes += 1
    if c.nodes > c.budget:
        return 1

    pc = 0
    xnz = 0
    for i in range(W):
        pc += __builtin_popcountll(P[i])
        if X[i]:
            xnz = 1
    if pc == 0 and xnz == 0:
        if depth > c.best:
            c.best = depth
            del c.out[:]
        if depth == c.best:
            c.out.append(tuple(sorted([c.stack[i] for i in range(depth)])))
        return 0
    if depth + pc < c.best:
        return 0

    pivot = -1
    pivot_cnt = -1
    for i in range(W):
        w = P[i] | X[i]
        while w:
            b = __builtin_ctzll(w)
            w &= w - 1
            u = (i << 6) + b
            row = c.adj + <size_t>u * W
            cnt = 0
            for j in range(W):
                cnt += __builtin_popcountll(P[j] & row[j])
            if cnt > pivot_cnt:
                pivot_cnt = cnt
                pivot = u

    row = c.adj + <size_t>pivot * W
    for i in range(W):
        B[i] = P[i] & ~row[i]

    P1 = c.arena + (<size_t>(depth + 1) * 3) * W
    X1 = P1 + W
    for i in range(W):
        w = B[i]
        while w:
            b = __builtin_ctzll(w)
            w &= w - 1
            v = (i << 6) + b
            row = c.adj + <size_t>v * W
            for j in range(W):
                P1[j] = P[j] & row[j]
                X1[j] = X[j] & row[j]
            c.stack[depth] = v
            if _expand(c, depth + 1):
                return 1
            P[i] &= ~((<u64>1) << b)
            X[i] |= (<u64>1) << b
    return 0


def enumerate_max_cliques(int n, list adj, long long budget):
    """All maximum cliques for per-vertex neighbor bitmasks (python ints).

    Returns (cliques, nodes) exactly like the pure-Python backend.
    """
    if n <= 0:
        return [], 0
    cdef int W = (n + 63) >> 6
    cdef _Ctx c = _Ctx()
    c.n = n
    c.nwords = W
    c.best = 0
    c.nodes = 0
    c.budget = budget
    c.out = []
    c.adj = <u64 *>calloc(<size_t>n * W, sizeof(u64))
    c.arena = <u64 *>calloc((<size_t>n + 2) * 3 * W, sizeof(u64))
    c.stack = <int *>calloc(<size_t>n, sizeof(int))
    if c.adj == NULL or c.arena == NULL or c.stack == NULL:
        raise MemoryError()

    cdef bytes data
    cdef const unsigned char[::1] view
    cdef int v
    for v in range(n):
        data = (<object>adj[v]).to_bytes(W * 8, "little")
        view = data
        memcpy(c.adj + <size_t>v * W, &view[0], <size_t>W * 8)

    cdef u64 *P = c.arena
    cdef int full_words = n >> 6
    cdef int rem = n & 63
    cdef int i
    for i in range(full_words):
        P[i] = <u64>0xFFFFFFFFFFFFFFFF
    if rem:
        P[full_words] = ((<u64>1) << rem) - 1

    if _expand(c, 0):
        raise BudgetExceededError(
            f"clique enumeration exceeded {budget} nodes", nodes=c.nodes
        )
    return c.out, c.nodes
