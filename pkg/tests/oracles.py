"""Independent oracles the tests check the library against.

Nothing here touches the library's own eigensolver: eigenvalues come
from LAPACK (`numpy.linalg.eigvalsh`), 2x2 spreads from the closed
form, and the small golden matrices from hand-expanded characteristic
polynomials (worked in comments where used).
"""

from __future__ import annotations

import math

import numpy as np


def eigvals_oracle(arr) -> np.ndarray:
    """LAPACK eigenvalues, descending; the differential reference."""
    return np.linalg.eigvalsh(np.asarray(arr, dtype=np.float64))[::-1]


def spread_oracle(arr) -> float:
    """Spread via LAPACK."""
    vals = eigvals_oracle(arr)
    return float(vals[0] - vals[-1])


def spread_2x2(p: float, q: float, r: float) -> float:
    """Closed-form spread of [[p, q], [q, r]]: sqrt((p - r)^2 + 4 q^2)."""
    return math.sqrt((p - r) ** 2 + 4.0 * q * q)


def quadratic_roots(b: float, c: float) -> tuple[float, float]:
    """Real roots of t^2 + b t + c, descending (discriminant >= 0)."""
    disc = math.sqrt(b * b - 4.0 * c)
    return (-b + disc) / 2.0, (-b - disc) / 2.0


def random_symmetric(rng: np.random.Generator, n: int, lo=-5.0, hi=5.0) -> np.ndarray:
    raw = rng.uniform(lo, hi, size=(n, n))
    return (raw + raw.T) / 2.0


def brute_max_spread_2x2(a: float, b: float) -> tuple[float, list[int]]:
    """Exhaustive maximum over the 8 vertex matrices of S_2{a, b}.

    Independent of the search engine: enumerates (p, q, r) endpoint
    choices directly and scores them with the closed form.  Returns the
    maximum and the bit patterns attaining it (bit order p, q, r).
    """
    best = -math.inf
    winners: list[int] = []
    for mask in range(8):
        p = b if mask & 1 else a
        q = b if mask & 2 else a
        r = b if mask & 4 else a
        s = spread_2x2(p, q, r)
        if s > best + 1e-12:
            best = s
            winners = [mask]
        elif abs(s - best) <= 1e-12:
            winners.append(mask)
    return best, winners
