# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled Levenshtein kernel for token sequences. Optional: align.py falls
back to the pure-Python implementation when this module is absent."""

from libc.stdlib cimport free, malloc


def lev(a, b):
    cdef Py_ssize_t la = len(a)
    cdef Py_ssize_t lb = len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    cdef dict enc = {}
    cdef long *ea = <long *> malloc(la * sizeof(long))
    cdef long *eb = <long *> malloc(lb * sizeof(long))
    cdef long *prev = <long *> malloc((lb + 1) * sizeof(long))
    cdef long *cur = <long *> malloc((lb + 1) * sizeof(long))
    if ea == NULL or eb == NULL or prev == NULL or cur == NULL:
        free(ea); free(eb); free(prev); free(cur)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef long nid = 0
    cdef long c, d, e, ai
    cdef long *tmp
    try:
        for i in range(la):
            v = enc.get(a[i])
            if v is None:
                enc[a[i]] = nid
                ea[i] = nid
                nid += 1
            else:
                ea[i] = <long> v
        for j in range(lb):
            v = enc.get(b[j])
            if v is None:
                enc[b[j]] = nid
                eb[j] = nid
                nid += 1
            else:
                eb[j] = <long> v
        for j in range(lb + 1):
            prev[j] = j
        for i in range(1, la + 1):
            cur[0] = i
            ai = ea[i - 1]
            for j in range(1, lb + 1):
                c = prev[j - 1]
                if ai != eb[j - 1]:
                    c += 1
                d = prev[j] + 1
                if d < c:
                    c = d
                e = cur[j - 1] + 1
                if e < c:
                    c = e
                cur[j] = c
            tmp = prev
            prev = cur
            cur = tmp
        return prev[lb]
    finally:
        free(ea)
        free(eb)
        free(prev)
        free(cur)
