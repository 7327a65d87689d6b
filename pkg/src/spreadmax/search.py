"""Exhaustive spread maximization over the vertex set of a matrix box.

Maximizers of the spread over S_n[a, b] are extreme points, i.e. have
all entries in {a, b}, so the exact maximum is found by enumerating the
2^(n(n+1)/2) upper-triangular bit patterns.  The scan is chunked over
workers with a bound-pruning option, collects every pattern within a
tie tolerance of the maximum, and canonicalizes maximizers under
simultaneous row/column permutation.  Stochastic harnesses double-check
extremality against interior samples and coordinate ascents.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import backend
from .bounds import mirsky_from_stats
from .core import Interval, SymMatrix
from .errors import (
    DegenerateInterval,
    DimensionTooLarge,
    FalsificationFound,
    MonotonicityViolation,
    NonConvergence,
    OutOfBox,
    SearchSpaceTooLarge,
)
from .structure import MaximizerReport, analyze

#: Hard cap on pattern bits; n(n+1)/2 above this refuses to enumerate.
MAX_PATTERN_BITS = 36

#: Canonicalization enumerates all n! permutations; refuse past this.
MAX_CANONICAL_N = 8

#: Spreads within this of the maximum count as co-maximizers.
TIE_TOL = 1e-9

#: Coordinate ascent stops when a full sweep improves less than this.
ASCENT_IMPROVE_TOL = 1e-12

#: Samples with every entry this close to {a, b} are redrawn.
VERTEX_SNAP_TOL = 1e-12


def pattern_bit_count(n: int) -> int:
    """Number of upper-triangular positions, n(n+1)/2."""
    return n * (n + 1) // 2


def triu_positions(n: int) -> list[tuple[int, int]]:
    """Upper-triangular (i, j) positions in row-major bit order."""
    return [(i, j) for i in range(n) for j in range(i, n)]


@dataclass(frozen=True)
class VertexPattern:
    """Bit pattern selecting {a, b} entries of a symmetric vertex matrix.

    Bit k of ``mask`` covers the k-th upper-triangular position in
    row-major order; a set bit selects the upper endpoint b.
    """

    n: int
    mask: int

    def __post_init__(self):
        m = pattern_bit_count(self.n)
        if not 0 <= self.mask < (1 << m):
            raise ValueError(f"mask {self.mask} out of range for n={self.n}")

    @property
    def bits(self) -> tuple[bool, ...]:
        m = pattern_bit_count(self.n)
        return tuple(bool((self.mask >> k) & 1) for k in range(m))

    def materialize(self, iv: Interval) -> SymMatrix:
        """The vertex matrix with entries a/b selected by the bits."""
        arr = np.empty((self.n, self.n))
        for k, (i, j) in enumerate(triu_positions(self.n)):
            val = iv.b if (self.mask >> k) & 1 else iv.a
            arr[i, j] = val
            arr[j, i] = val
        return SymMatrix(arr)

    @classmethod
    def from_matrix(cls, mat: SymMatrix, iv: Interval, tol: float = 1e-12) -> "VertexPattern":
        """Recover the pattern of a vertex matrix of the box."""
        mask = 0
        for k, (i, j) in enumerate(triu_positions(mat.n)):
            entry = float(mat.array[i, j])
            if abs(entry - iv.b) <= tol:
                mask |= 1 << k
            elif abs(entry - iv.a) > tol:
                raise OutOfBox(f"entry ({i}, {j}) = {entry!r} is not an endpoint of the box")
        return cls(n=mat.n, mask=mask)


@dataclass(frozen=True)
class SearchConfig:
    """Parameters of one exhaustive vertex search."""

    n: int
    interval: Interval
    canonical_dedupe: bool = False
    pruning: bool = True
    spread_tolerance: float = TIE_TOL
    worker_count: int = 1
    rng_seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not self.interval.a < self.interval.b:
            raise DegenerateInterval(
                f"search needs a < b, got [{self.interval.a}, {self.interval.b}]"
            )
        if self.worker_count < 1:
            raise ValueError(f"worker_count must be positive, got {self.worker_count}")
        if self.spread_tolerance <= 0:
            raise ValueError("spread_tolerance must be positive")


@dataclass(frozen=True)
class SearchStats:
    evaluated: int
    pruned: int
    elapsed_ms: float


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exhaustive search over the vertex set.

    ``maximizers`` pairs each within-tolerance pattern with its
    structural report, sorted by (canonical key, mask); with
    deduplication only the smallest mask of each canonical class stays.
    """

    n: int
    interval: Interval
    max_spread: float
    maximizers: list[tuple[VertexPattern, MaximizerReport]]
    stats: SearchStats
    canonical_keys: tuple[int, ...] = field(default=())

    @property
    def canonical_class_count(self) -> int:
        return len(set(self.canonical_keys))


def _guard_bits(n: int) -> int:
    m = pattern_bit_count(n)
    if m > MAX_PATTERN_BITS:
        raise SearchSpaceTooLarge(
            f"n={n} spans {m} pattern bits, above the {MAX_PATTERN_BITS}-bit cap"
        )
    return m


def enumerate_vertices(n: int):
    """Yield every vertex pattern of dimension n in ascending mask order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    m = _guard_bits(n)
    for mask in range(1 << m):
        yield VertexPattern(n=n, mask=mask)


def canonical_form(pattern: VertexPattern) -> int:
    """Smallest mask over all simultaneous row/column permutations.

    Permutation-similar patterns (same matrix up to renumbering the
    basis) share the key.  Explicit minimization over all n!
    permutations; refuses n > 8.
    """
    n = pattern.n
    if n > MAX_CANONICAL_N:
        raise DimensionTooLarge(
            f"canonicalization enumerates n! permutations; n={n} exceeds {MAX_CANONICAL_N}"
        )
    positions = triu_positions(n)
    ent = [[False] * n for _ in range(n)]
    for k, (i, j) in enumerate(positions):
        if (pattern.mask >> k) & 1:
            ent[i][j] = True
            ent[j][i] = True
    best = None
    for perm in itertools.permutations(range(n)):
        key = 0
        for k, (i, j) in enumerate(positions):
            if ent[perm[i]][perm[j]]:
                key |= 1 << k
        if best is None or key < best:
            best = key
    return best


def _diag_mask(n: int) -> int:
    mask = 0
    for k, (i, j) in enumerate(triu_positions(n)):
        if i == j:
            mask |= 1 << k
    return mask


def vertex_mirsky(pattern: VertexPattern, iv: Interval) -> float:
    """Mirsky bound of a vertex matrix computed from bit counts alone."""
    n = pattern.n
    diag_bits = pattern.mask & _diag_mask(n)
    diag_b = bin(diag_bits).count("1")
    total_b = bin(pattern.mask).count("1")
    off_b = total_b - diag_b
    off_total = n * (n - 1) // 2
    a, b = iv.a, iv.b
    fro_sq = (
        2.0 * (off_b * (b * b) + (off_total - off_b) * (a * a))
        + diag_b * (b * b)
        + (n - diag_b) * (a * a)
    )
    tr = diag_b * b + (n - diag_b) * a
    return mirsky_from_stats(fro_sq, tr, n)


def _chunk_ranges(total: int, worker_count: int) -> list[tuple[int, int]]:
    """Contiguous power-of-two chunking of [0, total) by leading bits."""
    workers = min(worker_count, total)
    chunks = 1 << max(0, (workers - 1).bit_length())
    step = total // chunks
    return [(c * step, (c + 1) * step) for c in range(chunks)]


def exhaustive_max(cfg: SearchConfig) -> SearchResult:
    """Exact spread maximization over the {a, b} vertex set.

    The result (maximum, tie set, canonical classes) is identical for
    any worker count and with pruning on or off; pruning and chunking
    only change the evaluated/pruned statistics.
    """
    m = _guard_bits(cfg.n)
    total = 1 << m
    tol = cfg.spread_tolerance
    iv = cfg.interval
    t0 = time.perf_counter()
    ranges = _chunk_ranges(total, cfg.worker_count)

    def run(rng: tuple[int, int]):
        return backend.search_chunk(
            cfg.n, iv.a, iv.b, rng[0], rng[1], cfg.pruning, tol
        )

    if cfg.worker_count == 1 or len(ranges) == 1:
        chunks = [run(r) for r in ranges]
    else:
        with ThreadPoolExecutor(max_workers=cfg.worker_count) as pool:
            chunks = list(pool.map(run, ranges))

    if sum(c[4] for c in chunks):
        raise NonConvergence("eigensolver failed on some vertex patterns")
    best = max(c[0] for c in chunks)
    ties = [t for c in chunks for t in c[1] if t[1] > best - tol]
    evaluated = sum(c[2] for c in chunks)
    pruned = sum(c[3] for c in chunks)

    entries = []
    for mask, _ in ties:
        pattern = VertexPattern(n=cfg.n, mask=mask)
        key = canonical_form(pattern)
        entries.append((key, mask, pattern))
    entries.sort(key=lambda e: (e[0], e[1]))
    if cfg.canonical_dedupe:
        entries = [next(group) for _, group in itertools.groupby(entries, key=lambda e: e[0])]

    maximizers = []
    keys = []
    for key, _, pattern in entries:
        report = analyze(pattern.materialize(iv), iv)
        maximizers.append((pattern, report))
        keys.append(key)

    elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return SearchResult(
        n=cfg.n,
        interval=iv,
        max_spread=best,
        maximizers=maximizers,
        stats=SearchStats(evaluated=evaluated, pruned=pruned, elapsed_ms=elapsed_ms),
        canonical_keys=tuple(keys),
    )


def _sample_interior(rng: np.random.Generator, n: int, iv: Interval) -> np.ndarray:
    """Symmetric matrix with uniform entries, not all at the endpoints."""
    positions = triu_positions(n)
    while True:
        arr = np.empty((n, n))
        for (i, j), val in zip(positions, rng.uniform(iv.a, iv.b, size=len(positions))):
            arr[i, j] = val
            arr[j, i] = val
        near_a = np.abs(arr - iv.a) <= VERTEX_SNAP_TOL
        near_b = np.abs(arr - iv.b) <= VERTEX_SNAP_TOL
        if not bool((near_a | near_b).all()):
            return arr


def coordinate_ascent(
    start: np.ndarray, iv: Interval, improve_tol: float = ASCENT_IMPROVE_TOL
):
    """Cyclic single-entry maximization of the spread over the box.

    The spread restricted to one (mirrored) entry is convex, so each
    step only compares the two interval endpoints, ties resolved toward
    the upper one.  Stops when a full sweep improves the spread by less
    than ``improve_tol`` or after 10 n^2 entry updates.

    Returns ``(matrix, spread, updates)``; after the first sweep the
    iterate is a vertex of the box.
    """
    cur = np.array(start, dtype=np.float64)
    n = cur.shape[0]
    positions = triu_positions(n)
    cur_spread = float(backend.spread_of(cur))
    max_updates = 10 * n * n
    updates = 0
    while updates < max_updates:
        sweep_start = cur_spread
        for i, j in positions:
            if updates >= max_updates:
                break
            cur[i, j] = cur[j, i] = iv.a
            low = float(backend.spread_of(cur))
            cur[i, j] = cur[j, i] = iv.b
            high = float(backend.spread_of(cur))
            if high >= low:
                cur_spread = high
            else:
                cur[i, j] = cur[j, i] = iv.a
                cur_spread = low
            updates += 1
        if cur_spread - sweep_start < improve_tol:
            break
    return cur, cur_spread, updates


@dataclass(frozen=True)
class ExtremalityReport:
    """Stochastic stress test of vertex optimality of the maximum."""

    n: int
    interval: Interval
    max_spread: float
    samples: int
    ascents: int
    best_sample_spread: float
    best_ascent_spread: float
    ascents_all_vertex: bool


def _worker_quotas(count: int, workers: int) -> list[int]:
    base, extra = divmod(count, workers)
    return [base + (1 if w < extra else 0) for w in range(workers)]


def theorem5_falsify(
    cfg: SearchConfig, samples: int = 10_000, ascents: int = 1_000
) -> ExtremalityReport:
    """Try to beat the vertex maximum from inside the box.

    Draws random matrices with at least one entry strictly inside
    (a, b) and runs coordinate ascents from random interior starts.
    Raises :class:`FalsificationFound` (carrying the matrix) if anything
    exceeds the vertex maximum beyond the tie tolerance — which would
    disprove vertex optimality.  Per-worker RNG streams derive
    deterministically from ``rng_seed`` and the worker index.
    """
    result = exhaustive_max(cfg)
    vertex_max = result.max_spread
    tol = cfg.spread_tolerance
    iv = cfg.interval
    # one child stream per (phase, worker) pair, all derived from rng_seed
    seeds = np.random.SeedSequence(cfg.rng_seed).spawn(2 * cfg.worker_count)

    best_sample = -math.inf
    best_ascent = -math.inf
    all_vertex = True
    for w, quota in enumerate(_worker_quotas(samples, cfg.worker_count)):
        rng = np.random.default_rng(seeds[w])
        for _ in range(quota):
            arr = _sample_interior(rng, cfg.n, iv)
            sp = float(backend.spread_of(arr))
            if sp > best_sample:
                best_sample = sp
            if sp > vertex_max + tol:
                raise FalsificationFound(
                    f"interior sample has spread {sp!r} > vertex max {vertex_max!r}",
                    matrix=arr,
                )
    for w, quota in enumerate(_worker_quotas(ascents, cfg.worker_count)):
        rng = np.random.default_rng(seeds[cfg.worker_count + w])
        for _ in range(quota):
            start = _sample_interior(rng, cfg.n, iv)
            final, sp, _ = coordinate_ascent(start, iv)
            if sp > best_ascent:
                best_ascent = sp
            at_vertex = bool(((final == iv.a) | (final == iv.b)).all())
            all_vertex = all_vertex and at_vertex
            if sp > vertex_max + tol:
                raise FalsificationFound(
                    f"coordinate ascent reached spread {sp!r} > vertex max {vertex_max!r}",
                    matrix=final,
                )
    return ExtremalityReport(
        n=cfg.n,
        interval=iv,
        max_spread=vertex_max,
        samples=samples,
        ascents=ascents,
        best_sample_spread=best_sample,
        best_ascent_spread=best_ascent,
        ascents_all_vertex=all_vertex,
    )


@dataclass(frozen=True)
class GrowthReport:
    """Exhaustive maxima for n = 1..max_n and their strict growth."""

    interval: Interval
    maxima: tuple[float, ...]

    @property
    def strictly_increasing(self) -> bool:
        return all(b - a > TIE_TOL for a, b in zip(self.maxima, self.maxima[1:]))


def lemma4_check(max_n: int, iv: Interval, worker_count: int = 1) -> GrowthReport:
    """Verify the maximal spread grows strictly with the dimension.

    Runs the exhaustive search for each n up to ``max_n`` and demands a
    margin above 1e-9 between consecutive maxima; a violation raises
    :class:`MonotonicityViolation` naming the offending step.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be positive, got {max_n}")
    _guard_bits(max_n)
    maxima = []
    for n in range(1, max_n + 1):
        cfg = SearchConfig(n=n, interval=iv, worker_count=worker_count)
        maxima.append(exhaustive_max(cfg).max_spread)
        if n > 1 and not maxima[-1] - maxima[-2] > TIE_TOL:
            raise MonotonicityViolation(
                f"max spread did not strictly increase from n={n - 1} "
                f"({maxima[-2]!r}) to n={n} ({maxima[-1]!r})",
                n=n,
            )
    return GrowthReport(interval=iv, maxima=tuple(maxima))


@dataclass(frozen=True)
class RankSurvey:
    """Numerical ranks of every maximizer found by one search."""

    n: int
    interval: Interval
    max_spread: float
    ranks: tuple[int, ...]
    asserted: bool

    @property
    def all_rank_two(self) -> bool:
        return all(r == 2 for r in self.ranks)


def conjecture_report(cfg: SearchConfig) -> RankSurvey:
    """Survey maximizer ranks; the n=3 case on [0, 1] is enforced.

    For n = 3 on [0, 1] every maximizer is known to have rank 2, so a
    different rank raises :class:`FalsificationFound`; for any other
    configuration the ranks are reported as findings only.
    """
    result = exhaustive_max(cfg)
    ranks = tuple(rep.numerical_rank for _, rep in result.maximizers)
    asserted = cfg.n == 3 and cfg.interval.a == 0.0 and cfg.interval.b == 1.0
    if asserted and any(r != 2 for r in ranks):
        raise FalsificationFound(
            f"n=3 maximizer on [0, 1] with rank != 2: ranks {ranks}"
        )
    return RankSurvey(
        n=cfg.n,
        interval=cfg.interval,
        max_spread=result.max_spread,
        ranks=ranks,
        asserted=asserted,
    )
