# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_pykernels`` for the reference semantics."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.string cimport memcmp

from gkforge.errors import CapExceeded

cnp.import_array()


cdef inline uint64_t _row_hash(const int32_t* row, Py_ssize_t d) noexcept nogil:
    cdef uint64_t h = 1469598103934665603ULL
    cdef Py_ssize_t i
    for i in range(d):
        h ^= <uint64_t>row[i]
        h *= 1099511628211ULL
    return h ^ (h >> 29)


cdef Py_ssize_t _probe(int64_t[::1] table, uint64_t mask, const int32_t* row,
                       int32_t[:, ::1] elems, Py_ssize_t d) noexcept:
    # returns slot holding row, or the empty slot where it belongs
    cdef uint64_t slot = _row_hash(row, d) & mask
    cdef int64_t v
    while True:
        v = table[slot]
        if v < 0:
            return <Py_ssize_t>slot
        if memcmp(&elems[v, 0], row, d * sizeof(int32_t)) == 0:
            return <Py_ssize_t>slot
        slot = (slot + 1) & mask


def closure(gens_in, Py_ssize_t cap):
    cdef const int32_t[:, ::1] gens = np.ascontiguousarray(gens_in, dtype=np.int32)
    cdef Py_ssize_t k = gens.shape[0], d = gens.shape[1]
    cdef Py_ssize_t capacity = 64
    elems_arr = np.empty((capacity, d), dtype=np.int32)
    rmul_arr = np.empty((k, capacity), dtype=np.int32)
    parent_arr = np.empty(capacity, dtype=np.int32)
    pgen_arr = np.empty(capacity, dtype=np.int32)
    cdef int32_t[:, ::1] elems = elems_arr
    cdef int32_t[:, ::1] rmul = rmul_arr
    cdef int32_t[::1] parent = parent_arr
    cdef int32_t[::1] pgen = pgen_arr
    cdef Py_ssize_t tsize = 256
    table_arr = np.full(tsize, -1, dtype=np.int64)
    cdef int64_t[::1] table = table_arr
    cdef uint64_t tmask = tsize - 1
    cdef int32_t[::1] buf = np.empty(d, dtype=np.int32)
    cdef Py_ssize_t n = 1, i, g, x, slot, j, m

    for x in range(d):
        elems[0, x] = x
    parent[0] = -1
    pgen[0] = -1
    table[_probe(table, tmask, &elems[0, 0], elems, d)] = 0

    i = 0
    while i < n:
        for g in range(k):
            for x in range(d):
                buf[x] = gens[g, elems[i, x]]
            slot = _probe(table, tmask, &buf[0], elems, d)
            if table[slot] >= 0:
                j = table[slot]
            else:
                if n >= cap:
                    raise CapExceeded(f"group closure exceeds cap of {cap} elements")
                if n >= capacity:
                    capacity *= 2
                    elems_arr = np.resize(elems_arr, (capacity, d))
                    new_rmul = np.empty((k, capacity), dtype=np.int32)
                    new_rmul[:, :n] = rmul_arr[:, :n]
                    rmul_arr = new_rmul
                    parent_arr = np.resize(parent_arr, capacity)
                    pgen_arr = np.resize(pgen_arr, capacity)
                    elems = elems_arr
                    rmul = rmul_arr
                    parent = parent_arr
                    pgen = pgen_arr
                j = n
                for x in range(d):
                    elems[j, x] = buf[x]
                parent[j] = <int32_t>i
                pgen[j] = <int32_t>g
                table[slot] = j
                n += 1
                if 2 * n > tsize:
                    tsize *= 2
                    table_arr = np.full(tsize, -1, dtype=np.int64)
                    table = table_arr
                    tmask = tsize - 1
                    for m in range(n):
                        table[_probe(table, tmask, &elems[m, 0], elems, d)] = m
            rmul[g, i] = <int32_t>j
        i += 1

    return (
        np.array(elems_arr[:n]),
        np.array(rmul_arr[:, :n]),
        np.array(parent_arr[:n]),
        np.array(pgen_arr[:n]),
    )


cdef int64_t _gcd(int64_t a, int64_t b) noexcept nogil:
    cdef int64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


def element_orders(elements_in):
    cdef const int32_t[:, ::1] elements = np.ascontiguousarray(elements_in, dtype=np.int32)
    cdef Py_ssize_t n = elements.shape[0], d = elements.shape[1]
    out = np.zeros(n, dtype=np.int64)
    cdef int64_t[::1] orders = out
    cdef unsigned char[::1] seen = np.zeros(max(d, 1), dtype=np.uint8)
    cdef Py_ssize_t i, x, y
    cdef int64_t length, acc
    with nogil:
        for i in range(n):
            for x in range(d):
                seen[x] = 0
            acc = 1
            for x in range(d):
                if seen[x]:
                    continue
                length = 0
                y = x
                while not seen[y]:
                    seen[y] = 1
                    y = elements[i, y]
                    length += 1
                acc = acc // _gcd(acc, length) * length
            orders[i] = acc
    return out


cdef Py_ssize_t _find(int32_t[::1] up, Py_ssize_t x) noexcept nogil:
    while up[x] != x:
        up[x] = up[up[x]]
        x = up[x]
    return x


def orbits(perms, Py_ssize_t n):
    out = np.arange(n, dtype=np.int32)
    cdef int32_t[::1] up = out
    cdef const int32_t[:, ::1] ps
    cdef Py_ssize_t x, a, b, r
    if len(perms) == 0:
        return out
    ps = np.ascontiguousarray(np.asarray(perms).reshape(len(perms), n), dtype=np.int32)
    with nogil:
        for r in range(ps.shape[0]):
            for x in range(n):
                a = _find(up, x)
                b = _find(up, ps[r, x])
                if a < b:
                    up[b] = <int32_t>a
                elif b < a:
                    up[a] = <int32_t>b
        for x in range(n):
            up[x] = <int32_t>_find(up, x)
    return out


def subgroup_closure(cols_in, start):
    mask_arr = np.array(start, dtype=np.uint8)
    cdef unsigned char[::1] mask = mask_arr
    cdef Py_ssize_t n = mask.shape[0]
    if len(cols_in) == 0:
        return mask_arr.astype(bool)
    cdef const int32_t[:, ::1] cols = np.ascontiguousarray(np.asarray(cols_in), dtype=np.int32)
    cdef Py_ssize_t k = cols.shape[0]
    queue_arr = np.empty(n, dtype=np.int32)
    cdef int32_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, x, g, y
    with nogil:
        for x in range(n):
            if mask[x]:
                queue[tail] = <int32_t>x
                tail += 1
        while head < tail:
            x = queue[head]
            head += 1
            for g in range(k):
                y = cols[g, x]
                if not mask[y]:
                    mask[y] = 1
                    queue[tail] = <int32_t>y
                    tail += 1
    return mask_arr.astype(bool)
