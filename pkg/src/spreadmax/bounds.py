"""Closed-form upper bounds on the spread.

Only the Mirsky bound ``sqrt(2 ||A||_F^2 - tr(A)^2 / n)`` is provided;
it is cheap enough to double as search pruning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import SymMatrix, spread
from .errors import NegativeRadicand

#: Radicand values below this are treated as corruption, not rounding.
RADICAND_TOL = -1e-12


@dataclass(frozen=True)
class BoundReport:
    """An upper bound, optionally with the realized spread and the gap."""

    bound_name: str
    value: float
    actual_spread: float | None = None
    gap: float | None = None


def frobenius_norm_sq(mat: SymMatrix) -> float:
    """Sum of squared entries."""
    arr = mat.array
    return float(np.sum(arr * arr))


def trace(mat: SymMatrix) -> float:
    """Sum of diagonal entries."""
    return float(np.trace(mat.array))


def mirsky_from_stats(fro_sq: float, tr: float, n: int) -> float:
    """Mirsky bound from the Frobenius norm squared and the trace.

    The radicand ``2*fro_sq - tr^2/n`` is nonnegative for symmetric
    input; values in [-1e-12, 0) are clamped to 0 as rounding noise,
    anything lower raises :class:`NegativeRadicand`.
    """
    rad = 2.0 * fro_sq - (tr * tr) / n
    if rad < RADICAND_TOL:
        raise NegativeRadicand(
            f"radicand {rad!r} below {RADICAND_TOL}; input is not a symmetric matrix"
        )
    return math.sqrt(rad) if rad > 0.0 else 0.0


def mirsky_bound(mat: SymMatrix) -> float:
    """Upper bound on the spread: sqrt(2 ||A||_F^2 - tr(A)^2 / n)."""
    return mirsky_from_stats(frobenius_norm_sq(mat), trace(mat), mat.n)


def bound_report(mat: SymMatrix, with_spread: bool = True) -> BoundReport:
    """Mirsky bound plus, optionally, the realized spread and the gap."""
    value = mirsky_bound(mat)
    if not with_spread:
        return BoundReport(bound_name="mirsky", value=value)
    actual = spread(mat)
    return BoundReport(
        bound_name="mirsky", value=value, actual_spread=actual, gap=value - actual
    )
