# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the modular kernels in ``_slow``.

Moduli are bounded below 2**31 at ring construction, so every product of two
reduced residues fits in a signed 64-bit integer.
"""

from libc.stdlib cimport calloc, free

ctypedef long long i64


cdef inline i64 _mod(i64 x, i64 m) nogil:
    x %= m
    if x < 0:
        x += m
    return x


def conv_mod(list a, list b, Py_ssize_t n_out, i64 modulus):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, top
    cdef i64 *xa = <i64 *> calloc(la + 1, sizeof(i64))
    cdef i64 *xb = <i64 *> calloc(lb + 1, sizeof(i64))
    cdef i64 *out = <i64 *> calloc(n_out + 1, sizeof(i64))
    cdef i64 x
    if xa == NULL or xb == NULL or out == NULL:
        free(xa); free(xb); free(out)
        raise MemoryError()
    try:
        for i in range(la):
            xa[i] = _mod(a[i], modulus)
        for j in range(lb):
            xb[j] = _mod(b[j], modulus)
        with nogil:
            for i in range(min(la, n_out)):
                x = xa[i]
                if x == 0:
                    continue
                top = min(lb, n_out - i)
                for j in range(top):
                    out[i + j] = (out[i + j] + x * xb[j]) % modulus
        return [out[i] for i in range(n_out)]
    finally:
        free(xa); free(xb); free(out)


def conv_trunc_mod(list a, list b, Py_ssize_t n_out, i64 p, Py_ssize_t nu):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, k, l, top
    cdef i64 *xa = <i64 *> calloc(la * nu + 1, sizeof(i64))
    cdef i64 *xb = <i64 *> calloc(lb * nu + 1, sizeof(i64))
    cdef i64 *out = <i64 *> calloc(n_out * nu + 1, sizeof(i64))
    cdef i64 u
    if xa == NULL or xb == NULL or out == NULL:
        free(xa); free(xb); free(out)
        raise MemoryError()
    try:
        for i in range(la):
            row = a[i]
            for k in range(nu):
                xa[i * nu + k] = _mod(row[k], p)
        for j in range(lb):
            row = b[j]
            for k in range(nu):
                xb[j * nu + k] = _mod(row[k], p)
        with nogil:
            for i in range(min(la, n_out)):
                top = min(lb, n_out - i)
                for k in range(nu):
                    u = xa[i * nu + k]
                    if u == 0:
                        continue
                    for j in range(top):
                        for l in range(nu - k):
                            out[(i + j) * nu + k + l] = (
                                out[(i + j) * nu + k + l] + u * xb[j * nu + l]
                            ) % p
        return [tuple([out[i * nu + k] for k in range(nu)]) for i in range(n_out)]
    finally:
        free(xa); free(xb); free(out)


def pos_params_mod(list c, Py_ssize_t K, i64 modulus):
    cdef Py_ssize_t lc = len(c), i, m
    cdef i64 *work = <i64 *> calloc(K + 2, sizeof(i64))
    cdef i64 a
    if work == NULL:
        raise MemoryError()
    try:
        for m in range(min(lc, K + 1)):
            work[m] = _mod(c[m], modulus)
        params = []
        for i in range(1, K + 1):
            a = _mod(-work[i], modulus)
            params.append(a)
            if a:
                for m in range(i, K + 1):
                    work[m] = (work[m] + a * work[m - i]) % modulus
        return params
    finally:
        free(work)


def pos_params_trunc_mod(list c, Py_ssize_t K, i64 p, Py_ssize_t nu):
    cdef Py_ssize_t lc = len(c), i, m, k, l
    cdef i64 *work = <i64 *> calloc((K + 2) * nu, sizeof(i64))
    cdef i64 *a = <i64 *> calloc(nu, sizeof(i64))
    cdef i64 u
    cdef bint nonzero
    if work == NULL or a == NULL:
        free(work); free(a)
        raise MemoryError()
    try:
        for m in range(min(lc, K + 1)):
            row = c[m]
            for k in range(nu):
                work[m * nu + k] = _mod(row[k], p)
        params = []
        for i in range(1, K + 1):
            nonzero = False
            for k in range(nu):
                a[k] = _mod(-work[i * nu + k], p)
                if a[k]:
                    nonzero = True
            params.append(tuple([a[k] for k in range(nu)]))
            if not nonzero:
                continue
            for m in range(i, K + 1):
                for k in range(nu):
                    u = a[k]
                    if u == 0:
                        continue
                    for l in range(nu - k):
                        work[m * nu + k + l] = (
                            work[m * nu + k + l] + u * work[(m - i) * nu + l]
                        ) % p
        return params
    finally:
        free(work); free(a)
