"""Differential tests between the compiled and pure kernel backends.

The two implementations share the exact operation order and the
extension is built without FP contraction, so every result is required
to be bit-identical, not merely close.
"""

import numpy as np
import pytest

from spreadmax import _pure
from spreadmax.search import pattern_bit_count

from .oracles import random_symmetric

native = pytest.importorskip(
    "spreadmax._native", reason="compiled extension not built"
)


def bits(x) -> bytes:
    return np.float64(x).tobytes()


class TestJacobiParity:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 12])
    def test_full_decomposition_bit_identical(self, n):
        rng = np.random.default_rng(900 + n)
        for _ in range(20):
            arr = random_symmetric(rng, n, -8.0, 8.0)
            e_pure, v_pure, s_pure = _pure.jacobi_full(arr)
            e_nat, v_nat, s_nat = native.jacobi_full(arr)
            assert s_pure == s_nat
            assert e_pure.tobytes() == e_nat.tobytes()
            assert v_pure.tobytes() == v_nat.tobytes()

    def test_spread_bit_identical(self):
        rng = np.random.default_rng(77)
        for _ in range(100):
            n = int(rng.integers(1, 10))
            arr = random_symmetric(rng, n)
            assert bits(_pure.spread_of(arr)) == bits(native.spread_of(arr))

    def test_batch_bit_identical(self):
        rng = np.random.default_rng(78)
        mats = np.stack([random_symmetric(rng, 5) for _ in range(64)])
        assert _pure.spread_batch(mats).tobytes() == native.spread_batch(mats).tobytes()


class TestSearchChunkParity:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("prune", [True, False])
    def test_full_scan_identical(self, n, prune):
        total = 1 << pattern_bit_count(n)
        for a, b in ((0.0, 1.0), (-1.0, 2.0), (-2.5, -0.5)):
            got_pure = _pure.search_chunk(n, a, b, 0, total, prune, 1e-9)
            got_native = native.search_chunk(n, a, b, 0, total, prune, 1e-9)
            assert bits(got_pure[0]) == bits(got_native[0])
            assert [(p, bits(s)) for p, s in got_pure[1]] == [
                (p, bits(s)) for p, s in got_native[1]
            ]
            assert got_pure[2:] == tuple(got_native[2:])

    def test_partial_ranges_identical(self):
        for start, stop in ((0, 17), (17, 40), (40, 64)):
            got_pure = _pure.search_chunk(3, 0.0, 1.0, start, stop, True, 1e-9)
            got_native = native.search_chunk(3, 0.0, 1.0, start, stop, True, 1e-9)
            assert bits(got_pure[0]) == bits(got_native[0])
            assert got_pure[2:] == tuple(got_native[2:])


class TestBackendSelection:
    def test_active_backend_exposes_contract(self):
        from spreadmax import backend

        assert backend.backend_name() in ("native", "pure")
        for name in ("jacobi_full", "spread_of", "spread_batch", "search_chunk"):
            assert callable(getattr(backend, name))

    def test_pure_override_via_env(self):
        import subprocess
        import sys

        code = "import spreadmax; print(spreadmax.backend_name())"
        out = subprocess.run(
            [sys.executable, "-c", code],
            capture_output=True,
            text=True,
            env={"PATH": "/usr/bin:/bin", "SPREADMAX_BACKEND": "pure"},
        )
        assert out.returncode == 0, out.stderr
        assert out.stdout.strip() == "pure"
