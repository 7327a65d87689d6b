# cython: language_level=3, boundscheck=False, wraparound=False
# cython: cdivision=True, initializedcheck=False
"""Compiled kernels: cyclic-by-row Jacobi and the vertex-pattern scan.

Twin of ``spreadmax._pure`` — identical operation order, and the build
disables FP contraction, so results are bit-identical to the pure
backend.  The pattern scan releases the GIL, which makes thread-based
search workers run in parallel.
"""

from libc.math cimport fabs, sqrt
from libc.stdlib cimport free, malloc

import numpy as np

MAX_SWEEPS = 100
OFF_REL_TOL = 1e-12
SIGN_EPS = 1e-12

BACKEND_NAME = "native"

cdef int _C_MAX_SWEEPS = 100
cdef double _C_OFF_REL_TOL = 1e-12
cdef double _C_SIGN_EPS = 1e-12
cdef double _NEG_INF = float("-inf")
cdef double _NAN = float("nan")


cdef double _off_sq(double* a, int n) noexcept nogil:
    cdef double acc = 0.0
    cdef int i, j, base
    for i in range(n):
        base = i * n
        for j in range(i + 1, n):
            acc += 2.0 * (a[base + j] * a[base + j])
    return acc


cdef void _rotate_sweep(double* a, double* v, int n) noexcept nogil:
    cdef int p, q, i
    cdef double apq, app, aqq, theta, t, c, s, tau, aip, aiq, vip, viq
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p * n + q]
            if apq == 0.0:
                continue
            app = a[p * n + p]
            aqq = a[q * n + q]
            theta = (aqq - app) / (2.0 * apq)
            if fabs(theta) < 1e150:
                t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
            else:
                t = 1.0 / (2.0 * theta)
            c = 1.0 / sqrt(t * t + 1.0)
            s = t * c
            tau = s / (1.0 + c)
            a[p * n + p] = app - t * apq
            a[q * n + q] = aqq + t * apq
            a[p * n + q] = 0.0
            a[q * n + p] = 0.0
            for i in range(n):
                if i == p or i == q:
                    continue
                aip = a[i * n + p]
                aiq = a[i * n + q]
                a[i * n + p] = aip - s * (aiq + tau * aip)
                a[p * n + i] = a[i * n + p]
                a[i * n + q] = aiq + s * (aip - tau * aiq)
                a[q * n + i] = a[i * n + q]
            if v != NULL:
                for i in range(n):
                    vip = v[i * n + p]
                    viq = v[i * n + q]
                    v[i * n + p] = vip - s * (viq + tau * vip)
                    v[i * n + q] = viq + s * (vip - tau * viq)


cdef int _converge(double* a, double* v, int n) noexcept nogil:
    cdef double fro_sq = 0.0
    cdef double thresh
    cdef int k, sweep
    for k in range(n * n):
        fro_sq += a[k] * a[k]
    thresh = (_C_OFF_REL_TOL * _C_OFF_REL_TOL) * fro_sq
    for sweep in range(_C_MAX_SWEEPS + 1):
        if _off_sq(a, n) <= thresh:
            return sweep
        if sweep == _C_MAX_SWEEPS:
            break
        _rotate_sweep(a, v, n)
    return -1


cdef void _descending_order(double* diag, int* idx, int n) noexcept nogil:
    cdef int i, j, key
    cdef double kv
    for i in range(n):
        idx[i] = i
    for i in range(1, n):
        key = idx[i]
        kv = diag[key]
        j = i - 1
        while j >= 0 and diag[idx[j]] < kv:
            idx[j + 1] = idx[j]
            j -= 1
        idx[j + 1] = key


cdef double _spread_from_diag(double* a, int n) noexcept nogil:
    cdef double hi = a[0]
    cdef double lo = a[0]
    cdef double d
    cdef int i
    for i in range(1, n):
        d = a[i * n + i]
        if d > hi:
            hi = d
        if d < lo:
            lo = d
    return hi - lo


def jacobi_full(mat):
    """Eigendecompose a symmetric matrix by cyclic-by-row Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors, sweeps)``; see the pure twin
    for the full contract.
    """
    m = np.ascontiguousarray(mat, dtype=np.float64)
    cdef int n = m.shape[0]
    a_arr = np.reshape(m, n * n).copy()
    v_arr = np.zeros(n * n, dtype=np.float64)
    cdef double[::1] a = a_arr
    cdef double[::1] v = v_arr
    cdef int i, k, col, sweeps
    cdef bint flip
    cdef double comp
    for i in range(n):
        v[i * n + i] = 1.0
    with nogil:
        sweeps = _converge(&a[0], &v[0], n)
    if sweeps < 0:
        return np.empty(0), np.empty((0, 0)), -1
    cdef double* diag = <double*>malloc(n * sizeof(double))
    cdef int* order = <int*>malloc(n * sizeof(int))
    if diag == NULL or order == NULL:
        free(diag)
        free(order)
        raise MemoryError()
    evals_arr = np.empty(n, dtype=np.float64)
    vecs_arr = np.empty((n, n), dtype=np.float64)
    cdef double[::1] evals = evals_arr
    cdef double[:, ::1] vecs = vecs_arr
    try:
        for i in range(n):
            diag[i] = a[i * n + i]
        _descending_order(diag, order, n)
        for k in range(n):
            col = order[k]
            evals[k] = a[col * n + col]
            flip = False
            for i in range(n):
                comp = v[i * n + col]
                if fabs(comp) > _C_SIGN_EPS:
                    flip = comp < 0.0
                    break
            if flip:
                for i in range(n):
                    vecs[k, i] = -v[i * n + col]
            else:
                for i in range(n):
                    vecs[k, i] = v[i * n + col]
    finally:
        free(diag)
        free(order)
    return evals_arr, vecs_arr, sweeps


def spread_of(mat):
    """Spread (max minus min eigenvalue); NaN when Jacobi fails."""
    m = np.ascontiguousarray(mat, dtype=np.float64)
    cdef int n = m.shape[0]
    a_arr = np.reshape(m, n * n).copy()
    cdef double[::1] a = a_arr
    cdef double out
    with nogil:
        if _converge(&a[0], NULL, n) < 0:
            out = _NAN
        else:
            out = _spread_from_diag(&a[0], n)
    return out


def spread_batch(mats):
    """Spreads of a stack of symmetric matrices, shape (m, n, n) -> (m,)."""
    stack = np.ascontiguousarray(mats, dtype=np.float64)
    cdef long count = stack.shape[0]
    cdef int n = stack.shape[1]
    out_arr = np.empty(count, dtype=np.float64)
    cdef double[:, :, ::1] src = stack
    cdef double[::1] out = out_arr
    cdef double* work = <double*>malloc(n * n * sizeof(double))
    if work == NULL:
        raise MemoryError()
    cdef long k
    cdef int i, j
    try:
        with nogil:
            for k in range(count):
                for i in range(n):
                    for j in range(n):
                        work[i * n + j] = src[k, i, j]
                if _converge(work, NULL, n) < 0:
                    out[k] = _NAN
                else:
                    out[k] = _spread_from_diag(work, n)
    finally:
        free(work)
    return out_arr


def search_chunk(int n, double a, double b,
                 unsigned long long start, unsigned long long stop,
                 bint prune, double tol):
    """Scan vertex patterns ``start <= p < stop``; GIL-free hot loop.

    Same contract as the pure twin: returns ``(best, ties, evaluated,
    pruned, failures)``.
    """
    if n < 1 or n > 8:
        raise ValueError("search_chunk supports 1 <= n <= 8")
    cdef int pos_i[36]
    cdef int pos_j[36]
    cdef double buf[64]
    cdef double work[64]
    cdef int m = 0
    cdef int i, j, k
    for i in range(n):
        for j in range(i, n):
            pos_i[m] = i
            pos_j[m] = j
            m += 1
    cdef double best = _NEG_INF
    ties = []
    cdef long long evaluated = 0
    cdef long long pruned = 0
    cdef long long failures = 0
    cdef unsigned long long pat
    cdef double fro_sq, tr, val, rad, sp, cut
    with nogil:
        for pat in range(start, stop):
            fro_sq = 0.0
            tr = 0.0
            for k in range(m):
                val = b if (pat >> k) & 1 else a
                i = pos_i[k]
                j = pos_j[k]
                buf[i * n + j] = val
                buf[j * n + i] = val
                if i == j:
                    tr += val
                    fro_sq += val * val
                else:
                    fro_sq += 2.0 * (val * val)
            if prune:
                rad = 2.0 * fro_sq - (tr * tr) / n
                if rad < 0.0:
                    rad = 0.0
                if sqrt(rad) <= best - tol:
                    pruned += 1
                    continue
            for k in range(n * n):
                work[k] = buf[k]
            if _converge(work, NULL, n) < 0:
                failures += 1
                continue
            sp = _spread_from_diag(work, n)
            evaluated += 1
            if sp > best:
                best = sp
                with gil:
                    ties.append((pat, sp))
                    cut = best - tol
                    ties = [t for t in ties if t[1] > cut]
            elif sp > best - tol:
                with gil:
                    ties.append((pat, sp))
    return best, ties, evaluated, pruned, failures
