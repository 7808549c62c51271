# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner loops. Mirrors ``_pykernels`` function for function.

Entries stay Python objects (ints or ring elements), so these loops only
remove interpreter overhead around the big-integer operations.
"""


def convolve(list a, list b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef list out
    cdef object ai
    if na == 0 or nb == 0:
        return []
    out = [0] * (na + nb - 1)
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            out[i + j] = out[i + j] + ai * b[j]
    return out


def recurrence_series(list num, list den, Py_ssize_t order, int sign):
    cdef Py_ssize_t nd = len(den), nn = len(num), i, j, top
    cdef list out = []
    cdef object acc
    for i in range(order):
        acc = num[i] if i < nn else 0
        top = i if i < nd - 1 else nd - 1
        for j in range(1, top + 1):
            acc = acc - den[j] * out[i - j]
        out.append(acc if sign == 1 else -acc)
    return out


def dp_next_column(list prev, Py_ssize_t n_max):
    cdef Py_ssize_t n, k
    cdef list cur = []
    cdef object acc
    for n in range(n_max + 1):
        acc = prev[n]
        for k in range(0, n, 2):
            acc = acc + prev[k] * cur[n - 1 - k]
        cur.append(acc)
    return cur


def matmul(list a, list b):
    cdef Py_ssize_t size = len(a), i, j, k
    cdef list bt = [list(c) for c in zip(*b)]
    cdef list out = [], row, col, out_row
    cdef object acc, x, y
    for i in range(size):
        row = a[i]
        out_row = []
        for j in range(size):
            col = bt[j]
            acc = 0
            for k in range(size):
                x = row[k]
                if x:
                    y = col[k]
                    if y:
                        acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out
