"""Randomized self-checks of the library's algebraic invariants.

Backs the ``verify properties`` CLI command: draws random matrices and
verifies decomposition quality, the spread algebra (homogeneity, shift
invariance, subadditivity), the Hadamard identity, the Rayleigh
sandwich, Mirsky dominance, and the two directions of the
spread-additivity criterion.  Everything is seeded and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import mirsky_bound
from .core import (
    SymMatrix,
    eigen_decompose,
    hadamard_spread_form,
    make_matrix,
    rayleigh,
    scale,
    shift,
    spread,
)
from .structure import additivity_test, eigenspace_intersection

#: Absolute slack for the spread algebra checks.
ALGEBRA_TOL = 1e-9

#: Relative budget for decomposition residuals.
RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class PropertyCheck:
    """Worst observed statistic of one invariant over all trials."""

    name: str
    ok: bool
    worst: float
    tolerance: float
    trials: int


@dataclass(frozen=True)
class PropertyBatteryReport:
    checks: tuple[PropertyCheck, ...]
    seed: int

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)


def _random_symmetric(rng: np.random.Generator, n: int, lo=-5.0, hi=5.0) -> SymMatrix:
    raw = rng.uniform(lo, hi, size=(n, n))
    return make_matrix((raw + raw.T) / 2.0)


def _random_unit(rng: np.random.Generator, n: int) -> np.ndarray:
    while True:
        vec = rng.standard_normal(n)
        norm = float(np.sqrt(vec @ vec))
        if norm > 1e-6:
            return vec / norm


def _shared_basis_pair(rng: np.random.Generator, n: int):
    """Two matrices sharing an eigenbasis with simple extreme eigenvalues."""
    seed_mat = _random_symmetric(rng, n)
    basis = eigen_decompose(seed_mat).eigenvectors

    def build():
        lam = np.sort(rng.uniform(-5.0, 5.0, size=n))[::-1]
        lam[0] += 1.0   # isolate the extremes so the eigenspaces are 1-d
        lam[-1] -= 1.0
        return make_matrix(basis.T @ (lam[:, None] * basis), symmetrize=True)

    return build(), build()


def run_property_battery(trials: int = 1000, n_max: int = 8, seed: int = 0) -> PropertyBatteryReport:
    """Run every invariant check ``trials`` times; see the module doc."""
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    worst: dict[str, float] = {}

    def record(name: str, value: float):
        if name not in worst or value > worst[name]:
            worst[name] = value

    for _ in range(trials):
        n = int(rng.integers(1, n_max + 1))
        mat = _random_symmetric(rng, n)
        spec = eigen_decompose(mat)
        lam = spec.eigenvalues
        vecs = spec.eigenvectors
        budget = max(1.0, float(np.sqrt(np.sum(mat.array**2))))

        rebuilt = vecs.T @ (lam[:, None] * vecs)
        record("reconstruction", float(np.linalg.norm(mat.array - rebuilt)) / budget)
        gram = vecs @ vecs.T
        record("orthonormality", float(np.max(np.abs(gram - np.eye(n)))) / budget)
        pair_res = mat.array @ vecs.T - vecs.T * lam[None, :]
        record("eigenpair_residual", float(np.max(np.sqrt(np.sum(pair_res**2, axis=0)))) / budget)

        s = spread(mat)
        alpha = float(rng.uniform(-10.0, 10.0))
        record("homogeneity", abs(spread(scale(mat, alpha)) - abs(alpha) * s))
        theta = float(rng.uniform(-10.0, 10.0))
        record("shift_invariance", abs(spread(shift(mat, theta)) - s))
        record("hadamard_identity", abs(hadamard_spread_form(mat, vecs[0], vecs[-1]) - s))

        x = _random_unit(rng, n)
        r = rayleigh(mat, x)
        record("rayleigh_sandwich", max(r - float(lam[0]), float(lam[-1]) - r))
        record("mirsky_dominance", s - mirsky_bound(mat))

        other = _random_symmetric(rng, n)
        t = float(rng.uniform(0.0, 1.0))
        mix = make_matrix(t * mat.array + (1.0 - t) * other.array)
        record("subadditivity", spread(mix) - (t * s + (1.0 - t) * spread(other)))

    shared_fail = 0
    generic_checked = 0
    generic_fail = 0
    for _ in range(trials):
        n = int(rng.integers(2, n_max + 1))
        a, b = _shared_basis_pair(rng, n)
        joined = (
            additivity_test(a, b)
            and eigenspace_intersection(a, b, "top") >= 1
            and eigenspace_intersection(a, b, "bottom") >= 1
        )
        if not joined:
            shared_fail += 1
        g1 = _random_symmetric(rng, n)
        g2 = _random_symmetric(rng, n)
        if (
            eigenspace_intersection(g1, g2, "top") == 0
            and eigenspace_intersection(g1, g2, "bottom") == 0
        ):
            generic_checked += 1
            if additivity_test(g1, g2):
                generic_fail += 1

    checks = (
        PropertyCheck("reconstruction", worst["reconstruction"] <= RESIDUAL_TOL,
                      worst["reconstruction"], RESIDUAL_TOL, trials),
        PropertyCheck("orthonormality", worst["orthonormality"] <= RESIDUAL_TOL,
                      worst["orthonormality"], RESIDUAL_TOL, trials),
        PropertyCheck("eigenpair_residual", worst["eigenpair_residual"] <= RESIDUAL_TOL,
                      worst["eigenpair_residual"], RESIDUAL_TOL, trials),
        PropertyCheck("homogeneity", worst["homogeneity"] <= ALGEBRA_TOL,
                      worst["homogeneity"], ALGEBRA_TOL, trials),
        PropertyCheck("shift_invariance", worst["shift_invariance"] <= ALGEBRA_TOL,
                      worst["shift_invariance"], ALGEBRA_TOL, trials),
        PropertyCheck("subadditivity", worst["subadditivity"] <= ALGEBRA_TOL,
                      worst["subadditivity"], ALGEBRA_TOL, trials),
        PropertyCheck("hadamard_identity", worst["hadamard_identity"] <= ALGEBRA_TOL,
                      worst["hadamard_identity"], ALGEBRA_TOL, trials),
        PropertyCheck("rayleigh_sandwich", worst["rayleigh_sandwich"] <= ALGEBRA_TOL,
                      worst["rayleigh_sandwich"], ALGEBRA_TOL, trials),
        PropertyCheck("mirsky_dominance", worst["mirsky_dominance"] <= ALGEBRA_TOL,
                      worst["mirsky_dominance"], ALGEBRA_TOL, trials),
        PropertyCheck("shared_basis_additivity", shared_fail == 0,
                      float(shared_fail), 0.0, trials),
        PropertyCheck("generic_nonadditivity", generic_fail == 0,
                      float(generic_fail), 0.0, generic_checked),
    )
    return PropertyBatteryReport(checks=checks, seed=seed)
