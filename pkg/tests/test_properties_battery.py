import subprocess
import sys

import spreadmax as sm


def test_battery_passes_and_is_deterministic():
    first = sm.run_property_battery(trials=30, n_max=6, seed=3)
    assert first.ok
    assert len(first.checks) == 11
    names = {c.name for c in first.checks}
    assert {"reconstruction", "mirsky_dominance", "generic_nonadditivity"} <= names
    second = sm.run_property_battery(trials=30, n_max=6, seed=3)
    assert first == second


def test_end_to_end_on_pure_backend():
    # the fallback backend must reproduce the golden search unchanged
    code = (
        "import json, math, spreadmax as sm\n"
        "assert sm.backend_name() == 'pure'\n"
        "mat = sm.make_matrix([[0,1,1],[1,1,1],[1,1,1]])\n"
        "assert abs(sm.spread(mat) - 2*math.sqrt(3)) <= 1e-9\n"
        "res = sm.exhaustive_max(sm.SearchConfig(n=3, interval=sm.Interval(0,1)))\n"
        "assert len(res.maximizers) == 3\n"
        "assert res.canonical_class_count == 1\n"
        "print('ok')\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"PATH": "/usr/bin:/bin", "SPREADMAX_BACKEND": "pure"},
    )
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "ok"
