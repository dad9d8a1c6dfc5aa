# cython: language_level=3, boundscheck=False, wraparound=False
"""int64 versions of the kernels in ``_pykernels``.

Every function returns ``None`` when an input does not fit in int64 or an
intermediate overflows; the dispatcher then reruns the pure-Python kernel.
"""
from libc.stdlib cimport malloc, calloc, free
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static inline int qp_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int qp_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    """
    bint qp_add_ovf(long long a, long long b, long long *r) nogil
    bint qp_mul_ovf(long long a, long long b, long long *r) nogil


cdef long long *_to_buffer(seq, Py_ssize_t n) except? NULL:
    cdef long long *buf = <long long *> calloc(n if n > 0 else 1, sizeof(long long))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(min(n, len(seq))):
            buf[i] = seq[i]
    except OverflowError:
        free(buf)
        return NULL
    return buf


cdef list _to_list(long long *buf, Py_ssize_t n):
    return [buf[i] for i in range(n)]


def mul_trunc(a, b, Py_ssize_t order):
    cdef Py_ssize_t na = min(len(a), order + 1), nb = min(len(b), order + 1)
    cdef long long *pa = _to_buffer(a, na)
    if pa == NULL:
        return None
    cdef long long *pb = _to_buffer(b, nb)
    if pb == NULL:
        free(pa)
        return None
    cdef long long *out = <long long *> calloc(order + 1, sizeof(long long))
    cdef Py_ssize_t i, j, top
    cdef long long x, t
    cdef bint bad = False
    with nogil:
        for i in range(na):
            x = pa[i]
            if x == 0:
                continue
            top = order - i + 1
            if top > nb:
                top = nb
            for j in range(top):
                if qp_mul_ovf(x, pb[j], &t) or qp_add_ovf(out[i + j], t, &out[i + j]):
                    bad = True
                    break
            if bad:
                break
    result = None if bad else _to_list(out, order + 1)
    free(pa)
    free(pb)
    free(out)
    return result


def invert_trunc(a, Py_ssize_t order):
    cdef Py_ssize_t na = min(len(a), order + 1)
    cdef long long *pa = _to_buffer(a, na)
    if pa == NULL:
        return None
    cdef long long *out = <long long *> calloc(order + 1, sizeof(long long))
    cdef long long c0 = pa[0], s, t
    cdef Py_ssize_t n, k, top
    cdef bint bad = False
    out[0] = c0
    with nogil:
        for n in range(1, order + 1):
            s = 0
            top = n if n < na - 1 else na - 1
            for k in range(1, top + 1):
                if pa[k] == 0:
                    continue
                if qp_mul_ovf(pa[k], out[n - k], &t) or qp_add_ovf(s, t, &s):
                    bad = True
                    break
            if bad or qp_mul_ovf(-c0, s, &out[n]):
                bad = True
                break
    result = None if bad else _to_list(out, order + 1)
    free(pa)
    free(out)
    return result


def run_dp_counts(Py_ssize_t n_max, Py_ssize_t min_part, long long one_run_weight):
    cdef Py_ssize_t size = n_max + 1, v, w
    cdef long long *closed = <long long *> calloc(size, sizeof(long long))
    cdef long long *open_ = <long long *> calloc(size, sizeof(long long))
    cdef long long *new_open = <long long *> calloc(size, sizeof(long long))
    cdef long long *swap
    cdef long long start, t
    cdef bint bad = False
    closed[0] = 1
    with nogil:
        for v in range(min_part if min_part > 1 else 1, n_max + 1):
            start = one_run_weight if v == 1 else 2
            for w in range(size):
                new_open[w] = 0
            for w in range(v, size):
                if (qp_mul_ovf(start, closed[w - v], &t)
                        or qp_add_ovf(t, open_[w - v], &new_open[w])):
                    bad = True
                    break
            if bad:
                break
            for w in range(size):
                if qp_add_ovf(closed[w], open_[w], &closed[w]):
                    bad = True
                    break
            if bad:
                break
            swap = open_
            open_ = new_open
            new_open = swap
        if not bad:
            for w in range(size):
                if qp_add_ovf(closed[w], open_[w], &closed[w]):
                    bad = True
                    break
    result = None if bad else _to_list(closed, size)
    free(closed)
    free(open_)
    free(new_open)
    return result


def run_dp_refined(Py_ssize_t m_max, Py_ssize_t n_max, Py_ssize_t min_part,
                   long long one_run_weight):
    cdef Py_ssize_t size = n_max + 1, rows = m_max + 1, cells = rows * size
    cdef long long *closed = <long long *> calloc(cells, sizeof(long long))
    cdef long long *open_ = <long long *> calloc(cells, sizeof(long long))
    cdef long long *new_open = <long long *> calloc(cells, sizeof(long long))
    cdef long long *swap
    cdef long long start, t
    cdef Py_ssize_t v, m, w, c
    cdef bint bad = False
    closed[0] = 1
    with nogil:
        for v in range(min_part if min_part > 1 else 1, n_max + 1):
            start = one_run_weight if v == 1 else 2
            for c in range(cells):
                new_open[c] = 0
            for m in range(1, rows):
                for w in range(v, size):
                    if (qp_mul_ovf(start, closed[(m - 1) * size + w - v], &t)
                            or qp_add_ovf(t, open_[(m - 1) * size + w - v],
                                          &new_open[m * size + w])):
                        bad = True
                        break
                if bad:
                    break
            if bad:
                break
            for c in range(cells):
                if qp_add_ovf(closed[c], open_[c], &closed[c]):
                    bad = True
                    break
            if bad:
                break
            swap = open_
            open_ = new_open
            new_open = swap
        if not bad:
            for c in range(cells):
                if qp_add_ovf(closed[c], open_[c], &closed[c]):
                    bad = True
                    break
    result = None
    if not bad:
        result = [[closed[m * size + w] for w in range(size)] for m in range(rows)]
    free(closed)
    free(open_)
    free(new_open)
    return result


def overpartition_counts(Py_ssize_t n_max, plain_ok, over_ok):
    cdef Py_ssize_t size = n_max + 1, v, w
    cdef long long *counts = <long long *> calloc(size, sizeof(long long))
    cdef char *plain = <char *> malloc(size)
    cdef char *over = <char *> malloc(size)
    cdef bint bad = False
    for v in range(size):
        plain[v] = 1 if plain_ok[v] else 0
        over[v] = 1 if over_ok[v] else 0
    counts[0] = 1
    with nogil:
        for v in range(1, size):
            if over[v]:
                w = n_max
                while w >= v:
                    if qp_add_ovf(counts[w], counts[w - v], &counts[w]):
                        bad = True
                        break
                    w -= 1
            if bad:
                break
            if plain[v]:
                for w in range(v, size):
                    if qp_add_ovf(counts[w], counts[w - v], &counts[w]):
                        bad = True
                        break
            if bad:
                break
    result = None if bad else _to_list(counts, size)
    free(counts)
    free(plain)
    free(over)
    return result
