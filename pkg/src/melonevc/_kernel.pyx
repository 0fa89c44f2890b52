# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``_kernel_py`` for graphs with n <= 64."""

from libc.stdint cimport uint64_t
from libcpp.vector cimport vector

BACKEND = "cython"

cdef enum:
    MAXN = 64


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _low_bit(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t _one(int v) nogil:
    return (<uint64_t>1) << v


cdef void _extend(int n, int start, uint64_t chosen, uint64_t skipped, int left,
                  const uint64_t* lower, vector[uint64_t]& out) nogil:
    cdef int x, v
    if left == 0:
        for v in range(start, n):
            if lower[v] & skipped:
                return
            skipped |= _one(v)
        out.push_back(chosen)
        return
    for x in range(start, n - left + 1):
        _extend(n, x + 1, chosen | _one(x), skipped, left - 1, lower, out)
        if lower[x] & skipped:
            return
        skipped |= _one(x)


def vertex_covers(int n, edges, int k):
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    if k < 0 or k > n:
        return []
    cdef uint64_t lower[MAXN]
    cdef int i, u, v
    for i in range(n):
        lower[i] = 0
    for u, v in edges:
        if u < v:
            lower[v] |= _one(u)
        else:
            lower[u] |= _one(v)
    cdef vector[uint64_t] out
    with nogil:
        _extend(n, 0, 0, 0, k, lower, out)
    return [m for m in out]


cdef bint _augment(int u, uint64_t target, const uint64_t* closed,
                   int* owner, uint64_t* seen) nogil:
    cdef uint64_t cand = closed[u] & target & ~seen[0]
    cdef int r
    while cand:
        r = _low_bit(cand)
        cand &= cand - 1
        if seen[0] & _one(r):
            continue
        seen[0] |= _one(r)
        if owner[r] < 0 or _augment(owner[r], target, closed, owner, seen):
            owner[r] = u
            return True
    return False


cdef bint _shift_exists(uint64_t c, uint64_t c2, int v, int w,
                        const uint64_t* closed) nogil:
    cdef int owner[MAXN]
    cdef int attempt, src, dst, i, u
    cdef uint64_t rest, target, seen
    cdef bint ok
    for attempt in range(2):
        if attempt == 0:
            src = v
            dst = w
        else:
            src = w
            dst = v
        if not (c >> src) & 1 or not (c2 >> dst) & 1:
            continue
        for i in range(MAXN):
            owner[i] = -1
        rest = c & ~_one(src)
        target = c2 & ~_one(dst)
        ok = True
        while rest:
            u = _low_bit(rest)
            rest &= rest - 1
            seen = 0
            if not _augment(u, target, closed, owner, &seen):
                ok = False
                break
        if ok:
            return True
    return False


def shift_exists(c, c2, int v, int w, closed):
    cdef uint64_t cl[MAXN]
    cdef int i
    cdef int n = len(closed)
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    for i in range(n):
        cl[i] = closed[i]
    return bool(_shift_exists(c, c2, v, w, cl))


def safe_set(closed, edges, covers):
    cdef int n = len(closed)
    if n > MAXN:
        raise ValueError("compiled kernel supports at most 64 vertices")
    cdef uint64_t cl[MAXN]
    cdef int i, j, e, u
    for i in range(n):
        cl[i] = closed[i]
    cdef int num = len(covers)
    cdef int num_edges = len(edges)
    cdef vector[uint64_t] cov
    cdef vector[uint64_t] reach
    cdef vector[int] ev
    cdef vector[int] ew
    cdef uint64_t m, r
    for i in range(num):
        m = covers[i]
        cov.push_back(m)
        r = 0
        while m:
            u = _low_bit(m)
            m &= m - 1
            r |= cl[u]
        reach.push_back(r)
    for e in range(num_edges):
        ev.push_back(edges[e][0])
        ew.push_back(edges[e][1])
    cdef vector[int] count
    count.resize(<size_t>num * num_edges, 0)
    cdef vector[vector[int]] preds
    preds.resize(num)
    cdef uint64_t c, c2
    with nogil:
        for i in range(num):
            c = cov[i]
            for j in range(num):
                c2 = cov[j]
                if (c2 & ~reach[i]) or (c & ~reach[j]):
                    continue
                for e in range(num_edges):
                    if _shift_exists(c, c2, ev[e], ew[e], cl):
                        count[i * num_edges + e] += 1
                        preds[j].push_back(i * num_edges + e)
    cdef vector[char] alive
    alive.resize(num, 1)
    cdef vector[int] queue
    cdef size_t head = 0
    cdef int slot
    for i in range(num):
        for e in range(num_edges):
            if count[i * num_edges + e] == 0:
                alive[i] = 0
                queue.push_back(i)
                break
    while head < queue.size():
        j = queue[head]
        head += 1
        for slot in preds[j]:
            count[slot] -= 1
            i = slot // num_edges
            if count[slot] == 0 and alive[i]:
                alive[i] = 0
                queue.push_back(i)
    return [covers[i] for i in range(num) if alive[i]]
