"""Structural diagnostics for spread maximizers on a box of matrices.

Predicates that a maximizer of the spread over S_n[a, b] must satisfy
(extremality, mixed diagonal, nonvanishing eigenvector products), the
single-entry segment decomposition, eigenspace intersection tests for
spread additivity, numerical rank, and the one-row border extension
that strictly grows the maximal spread with the dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backend
from .bounds import mirsky_bound
from .core import Interval, Spectrum, SymMatrix, eigen_decompose, hadamard_spread_form, spread
from .errors import (
    DegenerateInterval,
    DimensionMismatch,
    IndexOutOfRange,
    NotInteriorEntry,
    OutOfBox,
)

#: Entries must sit within this of an interval endpoint to be extreme.
EXTREME_TOL = 1e-12

#: |u_i u_j - v_i v_j| must exceed this for the product condition.
EIGENPRODUCT_TOL = 1e-9

#: Eigenvalues within ``RELATIVE * |extreme eigenvalue|`` of the extreme
#: eigenvalue span that eigenspace.
EIGENSPACE_MEMBERSHIP = 1e-8

#: Relative magnitude cut for the numerical rank.
RANK_TOL = 1e-8

#: Default tolerance for additivity / intersection decisions.
ADDITIVITY_TOL = 1e-9


@dataclass(frozen=True)
class MaximizerReport:
    """Structural diagnostics for one candidate maximizer.

    ``eigenproduct_violation`` is the first (i, j) with
    ``|u_i u_j - v_i v_j|`` at or below tolerance, when any.
    ``top_multiplicity``/``bottom_multiplicity`` flag repeated extreme
    eigenvalues, in which case the eigenvector-based checks are
    evaluated on the computed representative only.
    """

    is_extreme: bool
    diagonal_ok: bool
    eigenproduct_ok: bool
    eigenproduct_violation: tuple[int, int] | None
    numerical_rank: int
    spread: float
    mirsky: float
    hadamard_residual: float
    eigenvalues: tuple[float, ...]
    top_multiplicity: int
    bottom_multiplicity: int


@dataclass(frozen=True)
class SegmentReport:
    """Spreads along the one-entry segment through a matrix.

    A non-extreme maximizer would need all three to agree: the spread is
    convex, so a strict dip at either endpoint rules the midpoint out.
    """

    spread_low: float
    spread_high: float
    spread_mid: float
    alpha: float
    equal_within_tol: bool


def _require_in_box(mat: SymMatrix, iv: Interval, tol: float) -> None:
    low = float(np.min(mat.array))
    high = float(np.max(mat.array))
    if low < iv.a - tol or high > iv.b + tol:
        raise OutOfBox(
            f"entries span [{low!r}, {high!r}], outside [{iv.a!r}, {iv.b!r}] beyond {tol:.0e}"
        )


def is_extreme_point(mat: SymMatrix, iv: Interval, tol: float = EXTREME_TOL) -> bool:
    """True when every entry sits within ``tol`` of an interval endpoint.

    Entries outside ``[a - tol, b + tol]`` raise :class:`OutOfBox`.
    """
    _require_in_box(mat, iv, tol)
    arr = mat.array
    near_edge = (np.abs(arr - iv.a) <= tol) | (np.abs(arr - iv.b) <= tol)
    return bool(near_edge.all())


def diagonal_condition(mat: SymMatrix, iv: Interval, tol: float = EXTREME_TOL) -> bool:
    """True when the diagonal holds both endpoints of the interval.

    A maximizer with a single-valued diagonal could be shifted along the
    identity without changing its spread, so both values must appear.
    """
    diag = np.diagonal(mat.array)
    has_low = bool(np.any(np.abs(diag - iv.a) <= tol))
    has_high = bool(np.any(np.abs(diag - iv.b) <= tol))
    return has_low and has_high


def eigenproduct_condition(
    spec: Spectrum, tol: float = EIGENPRODUCT_TOL
) -> tuple[bool, tuple[int, int] | None]:
    """Check that u_i u_j - v_i v_j stays away from zero for all i, j.

    u and v are the top and bottom eigenvectors.  Returns
    ``(True, None)`` when every product magnitude exceeds ``tol``,
    otherwise ``(False, (i, j))`` for the first violating pair in
    row-major order.
    """
    u = spec.top_vector
    v = spec.bottom_vector
    prod = np.abs(np.outer(u, u) - np.outer(v, v))
    bad = np.argwhere(prod <= tol)
    if bad.size:
        i, j = bad[0]
        return False, (int(i), int(j))
    return True, None


def numerical_rank(spec: Spectrum, tau: float = RANK_TOL) -> int:
    """Count of eigenvalues with ``|lambda| > tau * max |lambda|``.

    The zero matrix has rank 0 by convention.
    """
    mags = np.abs(spec.eigenvalues)
    peak = float(np.max(mags))
    if peak == 0.0:
        return 0
    return int(np.count_nonzero(mags > tau * peak))


def additivity_test(a: SymMatrix, b: SymMatrix, tol: float = ADDITIVITY_TOL) -> bool:
    """True when spread(A + B) equals spread(A) + spread(B) within tol.

    Equality holds exactly when the two matrices share a top eigenvector
    and a bottom eigenvector; see :func:`eigenspace_intersection` for
    the condition side.
    """
    if a.n != b.n:
        raise DimensionMismatch(f"dimensions differ: {a.n} vs {b.n}")
    return abs(spread(a + b) - spread(a) - spread(b)) <= tol


def _extreme_eigenspace(spec: Spectrum, which: str) -> np.ndarray:
    """Rows spanning the eigenspace of the top or bottom eigenvalue."""
    evals = spec.eigenvalues
    if which == "top":
        extreme = evals[0]
    elif which == "bottom":
        extreme = evals[-1]
    else:
        raise ValueError(f"which must be 'top' or 'bottom', got {which!r}")
    mask = np.abs(evals - extreme) <= EIGENSPACE_MEMBERSHIP * abs(extreme)
    return spec.eigenvectors[mask]


def _extreme_multiplicity(spec: Spectrum, which: str) -> int:
    return _extreme_eigenspace(spec, which).shape[0]


def eigenspace_intersection(
    a: SymMatrix, b: SymMatrix, which: str = "top", tol: float = ADDITIVITY_TOL
) -> int:
    """Dimension of the intersection of two extreme eigenspaces.

    Both eigenspaces are spanned by the eigenvectors whose eigenvalues
    sit within ``1e-8 * |extreme|`` of the extreme eigenvalue.  The
    intersection dimension is the number of principal angles below
    ``sqrt(tol)``; the cosines come from the Gram matrix of the two
    orthonormal bases (its eigenvalues are the squared singular values).
    """
    if a.n != b.n:
        raise DimensionMismatch(f"dimensions differ: {a.n} vs {b.n}")
    basis_a = _extreme_eigenspace(eigen_decompose(a), which)
    basis_b = _extreme_eigenspace(eigen_decompose(b), which)
    cross = basis_a @ basis_b.T
    gram = cross.T @ cross
    gram = (gram + gram.T) / 2.0
    evals, _, sweeps = backend.jacobi_full(gram)
    if sweeps < 0:  # pragma: no cover - tiny Gram matrices always converge
        raise RuntimeError("Gram matrix eigensolve did not converge")
    k = min(basis_a.shape[0], basis_b.shape[0])
    cosines = np.sqrt(np.clip(evals[:k], 0.0, 1.0))
    angles = np.arccos(cosines)
    return int(np.count_nonzero(angles < math.sqrt(tol)))


def decompose_along_entry(
    mat: SymMatrix, i: int, j: int, iv: Interval
) -> tuple[SymMatrix, SymMatrix, float]:
    """Split a matrix along one entry into its interval-endpoint pair.

    Returns ``(low, high, alpha)`` where ``low``/``high`` equal ``mat``
    except entries (i, j) and (j, i) are set to ``a``/``b`` and
    ``alpha = (b - mat[i, j]) / (b - a)`` so that
    ``alpha * low + (1 - alpha) * high`` reproduces ``mat``.
    """
    n = mat.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"indices ({i}, {j}) outside a {n}x{n} matrix")
    if not iv.a < iv.b:
        raise DegenerateInterval(f"need a < b, got [{iv.a}, {iv.b}]")
    entry = float(mat.array[i, j])
    if not iv.contains(entry):
        raise OutOfBox(f"entry ({i}, {j}) = {entry!r} outside [{iv.a}, {iv.b}]")
    low = mat.with_entry(i, j, iv.a)
    high = mat.with_entry(i, j, iv.b)
    alpha = (iv.b - entry) / (iv.b - iv.a)
    return low, high, alpha


def segment_property_check(
    mat: SymMatrix, i: int, j: int, iv: Interval, tol: float = ADDITIVITY_TOL
) -> SegmentReport:
    """Spreads at a matrix and its two one-entry endpoint companions.

    Requires the (i, j) entry strictly inside (a, b); a maximizer that
    is not an extreme point would have to keep the spread constant along
    this segment.
    """
    n = mat.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"indices ({i}, {j}) outside a {n}x{n} matrix")
    entry = float(mat.array[i, j])
    if not iv.a < entry < iv.b:
        raise NotInteriorEntry(
            f"entry ({i}, {j}) = {entry!r} is not strictly inside ({iv.a}, {iv.b})"
        )
    low, high, alpha = decompose_along_entry(mat, i, j, iv)
    s_low = spread(low)
    s_high = spread(high)
    s_mid = spread(mat)
    worst = max(s_low, s_high, s_mid) - min(s_low, s_high, s_mid)
    return SegmentReport(
        spread_low=s_low,
        spread_high=s_high,
        spread_mid=s_mid,
        alpha=alpha,
        equal_within_tol=worst <= tol,
    )


def border_extend(mat: SymMatrix, x, corner: float) -> SymMatrix:
    """Symmetric (n+1)x(n+1) extension with a new first row and column.

    The spread of the extension is never below the spread of the
    original block (eigenvalue interlacing), which is what makes the
    maximal spread strictly increase with the dimension.
    """
    vec = np.asarray(x, dtype=np.float64).reshape(-1)
    n = mat.n
    if vec.shape[0] != n:
        raise DimensionMismatch(f"border vector length {vec.shape[0]} != {n}")
    out = np.empty((n + 1, n + 1))
    out[0, 0] = float(corner)
    out[0, 1:] = vec
    out[1:, 0] = vec
    out[1:, 1:] = mat.array
    return SymMatrix(out)


def analyze(
    mat: SymMatrix,
    iv: Interval,
    extreme_tol: float = EXTREME_TOL,
    eigenproduct_tol: float = EIGENPRODUCT_TOL,
    rank_tol: float = RANK_TOL,
) -> MaximizerReport:
    """Full structural report for one matrix against an interval box."""
    extreme = is_extreme_point(mat, iv, extreme_tol)
    spec = eigen_decompose(mat)
    spread_val = float(spec.eigenvalues[0] - spec.eigenvalues[-1])
    prod_ok, violation = eigenproduct_condition(spec, eigenproduct_tol)
    residual = abs(
        hadamard_spread_form(mat, spec.top_vector, spec.bottom_vector) - spread_val
    )
    return MaximizerReport(
        is_extreme=extreme,
        diagonal_ok=diagonal_condition(mat, iv, extreme_tol),
        eigenproduct_ok=prod_ok,
        eigenproduct_violation=violation,
        numerical_rank=numerical_rank(spec, rank_tol),
        spread=spread_val,
        mirsky=mirsky_bound(mat),
        hadamard_residual=residual,
        eigenvalues=tuple(float(v) for v in spec.eigenvalues),
        top_multiplicity=_extreme_multiplicity(spec, "top"),
        bottom_multiplicity=_extreme_multiplicity(spec, "bottom"),
    )
