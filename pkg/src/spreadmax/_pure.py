"""Pure-Python twin of the compiled kernels in ``spreadmax._native``.

Same rotation schedule, same operation order, same IEEE-754 double
arithmetic; the extension is compiled with FP contraction disabled so
both backends produce bit-identical numbers.  This module is the
import-time fallback when the extension is missing and the reference
half of the backend parity tests.
"""

from __future__ import annotations

import math

import numpy as np

#: Jacobi sweep budget before the solver reports non-convergence.
MAX_SWEEPS = 100

#: Converged when the off-diagonal Frobenius norm drops below
#: ``OFF_REL_TOL * ||A||_F`` (the input norm; invariant under rotations).
OFF_REL_TOL = 1e-12

#: First eigenvector component larger than this fixes the sign.
SIGN_EPS = 1e-12

BACKEND_NAME = "pure"


def _off_sq(a, n):
    """Sum of squared off-diagonal entries (both triangles)."""
    acc = 0.0
    for i in range(n):
        base = i * n
        for j in range(i + 1, n):
            acc += 2.0 * (a[base + j] * a[base + j])
    return acc


def _rotate_sweep(a, v, n):
    """One cyclic-by-row pass of Jacobi rotations over ``a`` (flat n*n).

    ``v`` accumulates the rotations column-wise when not None.
    """
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p * n + q]
            if apq == 0.0:
                continue
            app = a[p * n + p]
            aqq = a[q * n + q]
            theta = (aqq - app) / (2.0 * apq)
            if abs(theta) < 1e150:
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
            else:
                # theta*theta would overflow; use the asymptotic tangent
                t = 1.0 / (2.0 * theta)
            c = 1.0 / math.sqrt(t * t + 1.0)
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
            if v is not None:
                for i in range(n):
                    vip = v[i * n + p]
                    viq = v[i * n + q]
                    v[i * n + p] = vip - s * (viq + tau * vip)
                    v[i * n + q] = viq + s * (vip - tau * viq)


def _converge(a, v, n):
    """Sweep until converged; return the sweep count, or -1 on failure."""
    fro_sq = 0.0
    for k in range(n * n):
        fro_sq += a[k] * a[k]
    thresh = (OFF_REL_TOL * OFF_REL_TOL) * fro_sq
    for sweep in range(MAX_SWEEPS + 1):
        if _off_sq(a, n) <= thresh:
            return sweep
        if sweep == MAX_SWEEPS:
            break
        _rotate_sweep(a, v, n)
    return -1


def _descending_order(diag, n):
    """Stable insertion sort: indices of ``diag`` in descending order.

    Equal eigenvalues keep the order the accumulation produced.
    """
    idx = list(range(n))
    for i in range(1, n):
        key = idx[i]
        kv = diag[key]
        j = i - 1
        while j >= 0 and diag[idx[j]] < kv:
            idx[j + 1] = idx[j]
            j -= 1
        idx[j + 1] = key
    return idx


def _spread_from_diag(a, n):
    hi = a[0]
    lo = a[0]
    for i in range(1, n):
        d = a[i * n + i]
        if d > hi:
            hi = d
        if d < lo:
            lo = d
    return hi - lo


def jacobi_full(mat):
    """Eigendecompose a symmetric matrix by cyclic-by-row Jacobi rotations.

    Returns ``(eigenvalues, eigenvectors, sweeps)``: eigenvalues in
    descending order, eigenvectors as rows paired with them, each
    vector's first component of magnitude > 1e-12 made positive.
    ``sweeps`` is -1 when 100 sweeps did not converge (the two arrays
    are then empty).
    """
    m = np.ascontiguousarray(mat, dtype=np.float64)
    n = m.shape[0]
    a = [float(x) for x in m.reshape(n * n)]
    v = [0.0] * (n * n)
    for i in range(n):
        v[i * n + i] = 1.0
    sweeps = _converge(a, v, n)
    if sweeps < 0:
        return np.empty(0), np.empty((0, 0)), -1
    order = _descending_order([a[i * n + i] for i in range(n)], n)
    evals = np.empty(n)
    vecs = np.empty((n, n))
    for k in range(n):
        col = order[k]
        evals[k] = a[col * n + col]
        flip = False
        for i in range(n):
            comp = v[i * n + col]
            if abs(comp) > SIGN_EPS:
                flip = comp < 0.0
                break
        if flip:
            for i in range(n):
                vecs[k, i] = -v[i * n + col]
        else:
            for i in range(n):
                vecs[k, i] = v[i * n + col]
    return evals, vecs, sweeps


def spread_of(mat):
    """Spread (max minus min eigenvalue); NaN when Jacobi fails."""
    m = np.ascontiguousarray(mat, dtype=np.float64)
    n = m.shape[0]
    a = [float(x) for x in m.reshape(n * n)]
    if _converge(a, None, n) < 0:
        return float("nan")
    return _spread_from_diag(a, n)


def spread_batch(mats):
    """Spreads of a stack of symmetric matrices, shape (m, n, n) -> (m,)."""
    stack = np.ascontiguousarray(mats, dtype=np.float64)
    count = stack.shape[0]
    out = np.empty(count)
    for k in range(count):
        out[k] = spread_of(stack[k])
    return out


def search_chunk(n, a, b, start, stop, prune, tol):
    """Scan vertex patterns ``start <= p < stop`` of the {a,b} cube.

    Bit k of a pattern selects ``b`` (set) or ``a`` (clear) for the k-th
    upper-triangular position in row-major order.  Returns
    ``(best, ties, evaluated, pruned, failures)`` where ``ties`` holds
    ``(pattern, spread)`` pairs with ``spread > best - tol``, pruning
    skips patterns whose bound from entry counts cannot reach
    ``best - tol``, and ``failures`` counts non-converged eigensolves.
    """
    pos = [(i, j) for i in range(n) for j in range(i, n)]
    m = len(pos)
    buf = [0.0] * (n * n)
    best = -math.inf
    ties = []
    evaluated = 0
    pruned = 0
    failures = 0
    for pat in range(start, stop):
        fro_sq = 0.0
        tr = 0.0
        for k in range(m):
            val = b if (pat >> k) & 1 else a
            i, j = pos[k]
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
            if math.sqrt(rad) <= best - tol:
                pruned += 1
                continue
        work = buf.copy()
        if _converge(work, None, n) < 0:
            failures += 1
            continue
        sp = _spread_from_diag(work, n)
        evaluated += 1
        if sp > best:
            best = sp
            ties.append((pat, sp))
            cut = best - tol
            ties = [t for t in ties if t[1] > cut]
        elif sp > best - tol:
            ties.append((pat, sp))
    return best, ties, evaluated, pruned, failures
