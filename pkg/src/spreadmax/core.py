"""Symmetric matrices, their spectra, and the spread functional.

The spread of a real symmetric matrix is the diameter of its spectrum,
``lambda_max - lambda_min``.  Everything here is dense double precision
aimed at desk scale (n up to a few dozen): the eigensolver is a
cyclic-by-row Jacobi iteration provided by the selected kernel backend.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .errors import (
    DimensionMismatch,
    NonConvergence,
    NotSquare,
    NotSymmetric,
    NonUnitVector,
)

#: Largest tolerated asymmetry |A[i,j] - A[j,i]| before input is rejected.
SYMMETRY_TOL = 1e-12

#: Vectors must have 2-norm within this of 1 to count as unit vectors.
UNIT_TOL = 1e-10


@dataclass(frozen=True)
class Interval:
    """A closed interval [a, b] bounding matrix entries."""

    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        if not self.a <= self.b:
            raise ValueError(f"interval needs a <= b, got [{self.a}, {self.b}]")

    @property
    def width(self) -> float:
        return self.b - self.a

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.a - tol <= x <= self.b + tol


class SymMatrix:
    """Dense real symmetric matrix with exactly mirrored entries.

    Immutable: the wrapped array is a read-only copy.  Construction
    rejects non-square or asymmetric input; use :func:`make_matrix` for
    tolerance-based validation of raw rows.
    """

    __slots__ = ("array",)

    def __init__(self, array):
        arr = np.array(array, dtype=np.float64, order="C")
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise NotSquare(f"expected a square 2-d array, got shape {arr.shape}")
        if arr.shape[0] < 1:
            raise NotSquare("matrix dimension must be at least 1")
        if not np.isfinite(arr).all():
            raise ValueError("matrix entries must be finite")
        if not np.array_equal(arr, arr.T):
            raise NotSymmetric("entries are not exactly mirrored")
        arr.flags.writeable = False
        object.__setattr__(self, "array", arr)

    def __setattr__(self, name, value):
        raise AttributeError("SymMatrix is immutable")

    @property
    def n(self) -> int:
        return self.array.shape[0]

    def __getitem__(self, key):
        return self.array[key]

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        if not isinstance(other, SymMatrix):
            return NotImplemented
        if other.n != self.n:
            raise DimensionMismatch(f"cannot add {self.n}x{self.n} and {other.n}x{other.n}")
        return SymMatrix(self.array + other.array)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymMatrix) and np.array_equal(self.array, other.array)

    def __hash__(self):
        return hash((self.n, self.array.tobytes()))

    def __repr__(self) -> str:
        rows = ", ".join("[" + ", ".join(repr(x) for x in row) + "]" for row in self.array)
        return f"SymMatrix([{rows}])"

    def with_entry(self, i: int, j: int, value: float) -> "SymMatrix":
        """Copy with entries (i, j) and (j, i) replaced by ``value``."""
        arr = self.array.copy()
        arr[i, j] = value
        arr[j, i] = value
        return SymMatrix(arr)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order plus matched orthonormal eigenvectors.

    ``eigenvectors[k]`` (a row) is the unit eigenvector paired with
    ``eigenvalues[k]``; the first component of magnitude > 1e-12 of each
    vector is positive, which makes the decomposition deterministic.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    @property
    def top(self) -> float:
        """Largest eigenvalue."""
        return float(self.eigenvalues[0])

    @property
    def bottom(self) -> float:
        """Smallest eigenvalue."""
        return float(self.eigenvalues[-1])

    @property
    def top_vector(self) -> np.ndarray:
        return self.eigenvectors[0]

    @property
    def bottom_vector(self) -> np.ndarray:
        return self.eigenvectors[-1]


def make_matrix(rows, symmetrize: bool = False) -> SymMatrix:
    """Build a :class:`SymMatrix` from nested rows of reals.

    Asymmetry up to 1e-12 is repaired by copying the upper triangle to
    the lower one; larger asymmetry raises :class:`NotSymmetric` unless
    ``symmetrize`` is set, in which case the input is replaced by
    ``(A + A.T) / 2`` before validation.
    """
    try:
        arr = np.array(rows, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise NotSquare(f"input rows do not form a rectangular array: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotSquare(f"expected square input, got shape {arr.shape}")
    if symmetrize:
        arr = (arr + arr.T) / 2.0
    gap = float(np.max(np.abs(arr - arr.T))) if arr.size else 0.0
    if gap > SYMMETRY_TOL:
        raise NotSymmetric(
            f"max asymmetry {gap:.3e} exceeds {SYMMETRY_TOL:.0e}; "
            "pass symmetrize=True to average the triangles"
        )
    exact = np.triu(arr) + np.triu(arr, 1).T
    return SymMatrix(exact)


def eigen_decompose(mat: SymMatrix) -> Spectrum:
    """Full spectral decomposition via cyclic-by-row Jacobi rotations.

    Converges when the off-diagonal Frobenius norm falls below
    ``1e-12 * ||A||_F``; raises :class:`NonConvergence` after 100 sweeps
    (unreachable for sane input at this scale).
    """
    evals, vecs, sweeps = backend.jacobi_full(mat.array)
    if sweeps < 0:
        raise NonConvergence(
            f"Jacobi failed to converge within {backend.MAX_SWEEPS} sweeps"
        )
    evals.flags.writeable = False
    vecs.flags.writeable = False
    return Spectrum(eigenvalues=evals, eigenvectors=vecs, sweeps=sweeps)


def spread(mat: SymMatrix) -> float:
    """Spread of the matrix: largest minus smallest eigenvalue.

    Always nonnegative; 0 for 1x1 matrices.
    """
    value = backend.spread_of(mat.array)
    if value != value:  # NaN signals non-convergence
        raise NonConvergence(
            f"Jacobi failed to converge within {backend.MAX_SWEEPS} sweeps"
        )
    return float(value)


def _check_unit(x: np.ndarray, name: str) -> np.ndarray:
    vec = np.asarray(x, dtype=np.float64).reshape(-1)
    norm = float(np.sqrt(np.dot(vec, vec)))
    if abs(norm - 1.0) > UNIT_TOL:
        raise NonUnitVector(f"{name} has 2-norm {norm!r}, expected 1 within {UNIT_TOL:.0e}")
    return vec


def rayleigh(mat: SymMatrix, x) -> float:
    """Rayleigh quotient x^T A x for a unit vector x.

    The value always lies between the smallest and largest eigenvalue.
    """
    vec = _check_unit(x, "x")
    if vec.shape[0] != mat.n:
        raise DimensionMismatch(f"vector length {vec.shape[0]} != matrix dimension {mat.n}")
    return float(vec @ mat.array @ vec)


def hadamard_spread_form(mat: SymMatrix, u, v) -> float:
    """Evaluate e [A o (u u^T - v v^T)] e^T with o the Hadamard product.

    ``e`` is the all-ones row vector, so this is
    ``sum_ij A_ij (u_i u_j - v_i v_j)``.  With u and v the eigenvectors
    of the extreme eigenvalues it reproduces the spread.
    """
    uu = _check_unit(u, "u")
    vv = _check_unit(v, "v")
    if uu.shape[0] != mat.n or vv.shape[0] != mat.n:
        raise DimensionMismatch("u and v must match the matrix dimension")
    ones = np.ones(mat.n)
    weighted = mat.array * (np.outer(uu, uu) - np.outer(vv, vv))
    return float(ones @ weighted @ ones)


def scale(mat: SymMatrix, alpha: float) -> SymMatrix:
    """Multiply every entry by ``alpha``; spread scales by ``|alpha|``."""
    return SymMatrix(mat.array * float(alpha))


def shift(mat: SymMatrix, theta: float) -> SymMatrix:
    """Add ``theta`` times the identity; the spread is unchanged."""
    arr = mat.array.copy()
    arr[np.diag_indices(mat.n)] += float(theta)
    return SymMatrix(arr)
