"""Command-line interface.

One verb per artifact: ``spread`` and ``bound`` evaluate a matrix file,
``check`` runs the maximizer diagnostics against a box, ``search`` runs
the exhaustive vertex maximization, and ``verify`` drives the
theorem-level harnesses (``theorem5``, ``lemma4``, ``conjecture``,
``properties``).  Exit codes: 0 success, 1 a verification found a
violation, 2 invalid input.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import __version__
from .bounds import bound_report
from .core import Interval, SymMatrix, spread
from .errors import InputError, NegativeRadicand, NonConvergence, VerificationFailure
from .matrixio import format_float, json_dumps, parse_matrix_file
from .properties import run_property_battery
from .search import (
    SearchConfig,
    SearchResult,
    conjecture_report,
    exhaustive_max,
    lemma4_check,
    theorem5_falsify,
)
from .structure import MaximizerReport, analyze


@dataclass(frozen=True)
class RunConfig:
    """A validated CLI invocation: command, output mode, raw options."""

    command: str
    output_mode: str
    options: argparse.Namespace


def _default_threads() -> int:
    raw = os.environ.get("SPREADMAX_THREADS", "").strip()
    if raw:
        try:
            value = int(raw)
            if value >= 1:
                return value
        except ValueError:
            pass
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spreadmax",
        description="Spread maximization toolkit for symmetric matrices with boxed entries.",
    )
    parser.add_argument("--version", action="version", version=f"spreadmax {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="matrix text file (rows of decimals, '#' comments)")
        p.add_argument("--symmetrize", action="store_true",
                       help="replace A by (A + A^T)/2 before validation")
        p.add_argument("--json", action="store_true", help="emit JSON instead of text")
        return p

    add_file_cmd("spread", "spread (max minus min eigenvalue) of a matrix file")
    add_file_cmd("bound", "Mirsky upper bound, realized spread, and gap")

    p_check = add_file_cmd("check", "structural maximizer diagnostics against a box")
    p_check.add_argument("--a", type=float, required=True, help="lower interval endpoint")
    p_check.add_argument("--b", type=float, required=True, help="upper interval endpoint")

    p_search = sub.add_parser("search", help="exhaustive spread maximization over the vertex set")
    p_search.add_argument("--n", type=int, required=True, help="matrix dimension")
    p_search.add_argument("--a", type=float, required=True)
    p_search.add_argument("--b", type=float, required=True)
    p_search.add_argument("--canonical", action="store_true",
                          help="keep one representative per permutation-similarity class")
    p_search.add_argument("--no-prune", action="store_true", help="disable bound pruning")
    p_search.add_argument("--threads", type=int, default=None,
                          help="worker count (default: SPREADMAX_THREADS or 1)")
    p_search.add_argument("--tie-tol", type=float, default=1e-9,
                          help="spreads within this of the maximum tie (default 1e-9)")
    p_search.add_argument("--out", default=None, help="also write the JSON result to this file")
    p_search.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="run a verification harness")
    vsub = p_verify.add_subparsers(dest="target", required=True)

    p_t5 = vsub.add_parser("theorem5", help="interior samples and ascents never beat the vertex max")
    p_t5.add_argument("--n", type=int, required=True)
    p_t5.add_argument("--a", type=float, required=True)
    p_t5.add_argument("--b", type=float, required=True)
    p_t5.add_argument("--samples", type=int, default=10_000)
    p_t5.add_argument("--ascents", type=int, default=1_000)
    p_t5.add_argument("--seed", type=int, default=0)
    p_t5.add_argument("--threads", type=int, default=None)
    p_t5.add_argument("--json", action="store_true")

    p_l4 = vsub.add_parser("lemma4", help="maximal spread strictly increases with the dimension")
    p_l4.add_argument("--max-n", type=int, required=True)
    p_l4.add_argument("--a", type=float, required=True)
    p_l4.add_argument("--b", type=float, required=True)
    p_l4.add_argument("--threads", type=int, default=None)
    p_l4.add_argument("--json", action="store_true")

    p_cj = vsub.add_parser("conjecture", help="survey maximizer ranks (rank 2 enforced for n=3 on [0,1])")
    p_cj.add_argument("--n", type=int, required=True)
    p_cj.add_argument("--a", type=float, required=True)
    p_cj.add_argument("--b", type=float, required=True)
    p_cj.add_argument("--threads", type=int, default=None)
    p_cj.add_argument("--json", action="store_true")

    p_pr = vsub.add_parser("properties", help="randomized algebraic invariant battery")
    p_pr.add_argument("--trials", type=int, default=1000)
    p_pr.add_argument("--n-max", type=int, default=8)
    p_pr.add_argument("--seed", type=int, default=0)
    p_pr.add_argument("--json", action="store_true")

    return parser


def parse_args(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    command = ns.command if ns.command != "verify" else f"verify-{ns.target}"
    mode = "json" if getattr(ns, "json", False) else "human"
    return RunConfig(command=command, output_mode=mode, options=ns)


def _interval(ns) -> Interval:
    return Interval(ns.a, ns.b)


def _threads(ns) -> int:
    return ns.threads if getattr(ns, "threads", None) else _default_threads()


def _matrix_rows(mat: SymMatrix) -> list[list[float]]:
    return [[float(x) for x in row] for row in mat.array]


def _report_payload(report: MaximizerReport) -> dict:
    return {
        "spread": report.spread,
        "mirsky": report.mirsky,
        "rank": report.numerical_rank,
        "checks": {
            "extreme": report.is_extreme,
            "diagonal": report.diagonal_ok,
            "eigenproduct": report.eigenproduct_ok,
        },
        "eigenproduct_violation": list(report.eigenproduct_violation)
        if report.eigenproduct_violation
        else None,
        "hadamard_residual": report.hadamard_residual,
        "extreme_multiplicity": [report.top_multiplicity, report.bottom_multiplicity],
    }


def emit_search_result(result: SearchResult, mode: str) -> str:
    """Serialize a search result; JSON schema is part of the contract."""
    if not result.maximizers:
        raise ValueError("search result lists no maximizers; invariant violated")
    if mode == "json":
        payload = {
            "n": result.n,
            "interval": [result.interval.a, result.interval.b],
            "max_spread": result.max_spread,
            "maximizers": [
                {
                    "matrix": _matrix_rows(pattern.materialize(result.interval)),
                    "eigenvalues": list(report.eigenvalues),
                    "rank": report.numerical_rank,
                    "checks": {
                        "extreme": report.is_extreme,
                        "diagonal": report.diagonal_ok,
                        "eigenproduct": report.eigenproduct_ok,
                    },
                }
                for pattern, report in result.maximizers
            ],
            "stats": {
                "evaluated": result.stats.evaluated,
                "pruned": result.stats.pruned,
                "elapsed_ms": result.stats.elapsed_ms,
            },
        }
        return json_dumps(payload)
    lines = [
        f"n = {result.n}, interval = [{format_float(result.interval.a)}, "
        f"{format_float(result.interval.b)}]",
        f"max spread = {format_float(result.max_spread)}",
        f"maximizers = {len(result.maximizers)} "
        f"(canonical classes: {result.canonical_class_count})",
        f"evaluated = {result.stats.evaluated}, pruned = {result.stats.pruned}, "
        f"elapsed = {result.stats.elapsed_ms:.3f} ms",
    ]
    for idx, (pattern, report) in enumerate(result.maximizers, start=1):
        mat = pattern.materialize(result.interval)
        lines.append(
            f"#{idx} mask={pattern.mask} spread={format_float(report.spread)} "
            f"rank={report.numerical_rank} extreme={report.is_extreme} "
            f"diagonal={report.diagonal_ok} eigenproduct={report.eigenproduct_ok}"
        )
        for row in mat.array:
            lines.append("    " + " ".join(format_float(x) for x in row))
    return "\n".join(lines)


def _print(text: str, out=None):
    print(text, file=out or sys.stdout)


def dispatch(cfg: RunConfig) -> int:
    """Run one validated CLI invocation and return the exit code."""
    ns = cfg.options

    if cfg.command == "spread":
        mat = parse_matrix_file(ns.file, symmetrize=ns.symmetrize)
        value = spread(mat)
        if cfg.output_mode == "json":
            _print(json_dumps({"n": mat.n, "spread": value}))
        else:
            _print(f"spread = {format_float(value)}")
        return 0

    if cfg.command == "bound":
        mat = parse_matrix_file(ns.file, symmetrize=ns.symmetrize)
        report = bound_report(mat)
        if cfg.output_mode == "json":
            _print(json_dumps({
                "n": mat.n,
                "bound_name": report.bound_name,
                "value": report.value,
                "actual_spread": report.actual_spread,
                "gap": report.gap,
            }))
        else:
            _print(f"{report.bound_name} bound = {format_float(report.value)}")
            _print(f"spread = {format_float(report.actual_spread)}")
            _print(f"gap = {format_float(report.gap)}")
        return 0

    if cfg.command == "check":
        mat = parse_matrix_file(ns.file, symmetrize=ns.symmetrize)
        iv = _interval(ns)
        report = analyze(mat, iv)
        if cfg.output_mode == "json":
            payload = {"n": mat.n, "interval": [iv.a, iv.b]}
            payload.update(_report_payload(report))
            _print(json_dumps(payload))
        else:
            _print(f"interval = [{format_float(iv.a)}, {format_float(iv.b)}]")
            _print(f"spread = {format_float(report.spread)}")
            _print(f"mirsky bound = {format_float(report.mirsky)}")
            _print(f"numerical rank = {report.numerical_rank}")
            _print(f"extreme point: {report.is_extreme}")
            _print(f"diagonal holds both endpoints: {report.diagonal_ok}")
            if report.eigenproduct_ok:
                _print("eigenvector products stay away from zero: True")
            else:
                _print(
                    "eigenvector products stay away from zero: False "
                    f"at {report.eigenproduct_violation}"
                )
            _print(f"hadamard residual = {format_float(report.hadamard_residual)}")
        return 0

    if cfg.command == "search":
        config = SearchConfig(
            n=ns.n,
            interval=_interval(ns),
            canonical_dedupe=ns.canonical,
            pruning=not ns.no_prune,
            spread_tolerance=ns.tie_tol,
            worker_count=_threads(ns),
        )
        result = exhaustive_max(config)
        if ns.out:
            with open(ns.out, "w", encoding="utf-8") as fh:
                fh.write(emit_search_result(result, "json") + "\n")
        _print(emit_search_result(result, cfg.output_mode))
        return 0

    if cfg.command == "verify-theorem5":
        config = SearchConfig(
            n=ns.n, interval=_interval(ns), worker_count=_threads(ns), rng_seed=ns.seed
        )
        report = theorem5_falsify(config, samples=ns.samples, ascents=ns.ascents)
        if cfg.output_mode == "json":
            _print(json_dumps({
                "n": report.n,
                "interval": [report.interval.a, report.interval.b],
                "max_spread": report.max_spread,
                "samples": report.samples,
                "ascents": report.ascents,
                "best_sample_spread": report.best_sample_spread,
                "best_ascent_spread": report.best_ascent_spread,
                "ascents_all_vertex": report.ascents_all_vertex,
                "counterexample": None,
            }))
        else:
            _print(f"vertex max spread = {format_float(report.max_spread)}")
            _print(f"best of {report.samples} interior samples = "
                   f"{format_float(report.best_sample_spread)}")
            _print(f"best of {report.ascents} coordinate ascents = "
                   f"{format_float(report.best_ascent_spread)}")
            _print(f"all ascents ended at a vertex: {report.ascents_all_vertex}")
            _print("no counterexample found")
        return 0

    if cfg.command == "verify-lemma4":
        report = lemma4_check(ns.max_n, _interval(ns), worker_count=_threads(ns))
        if cfg.output_mode == "json":
            _print(json_dumps({
                "interval": [report.interval.a, report.interval.b],
                "maxima": list(report.maxima),
                "strictly_increasing": report.strictly_increasing,
            }))
        else:
            for n, value in enumerate(report.maxima, start=1):
                _print(f"n = {n}: max spread = {format_float(value)}")
            _print(f"strictly increasing: {report.strictly_increasing}")
        return 0

    if cfg.command == "verify-conjecture":
        config = SearchConfig(n=ns.n, interval=_interval(ns), worker_count=_threads(ns))
        survey = conjecture_report(config)
        if cfg.output_mode == "json":
            _print(json_dumps({
                "n": survey.n,
                "interval": [survey.interval.a, survey.interval.b],
                "max_spread": survey.max_spread,
                "ranks": list(survey.ranks),
                "all_rank_two": survey.all_rank_two,
                "asserted": survey.asserted,
            }))
        else:
            _print(f"max spread = {format_float(survey.max_spread)}")
            _print(f"maximizer ranks = {list(survey.ranks)}")
            _print(f"all rank two: {survey.all_rank_two} "
                   f"({'enforced' if survey.asserted else 'reported only'})")
        return 0

    if cfg.command == "verify-properties":
        report = run_property_battery(trials=ns.trials, n_max=ns.n_max, seed=ns.seed)
        if cfg.output_mode == "json":
            _print(json_dumps({
                "seed": report.seed,
                "ok": report.ok,
                "checks": [
                    {
                        "name": c.name,
                        "ok": c.ok,
                        "worst": c.worst,
                        "tolerance": c.tolerance,
                        "trials": c.trials,
                    }
                    for c in report.checks
                ],
            }))
        else:
            for c in report.checks:
                state = "ok" if c.ok else "FAIL"
                _print(f"{c.name}: {state} (worst {format_float(c.worst)}, "
                       f"tol {format_float(c.tolerance)}, trials {c.trials})")
        return 0 if report.ok else 1

    raise ValueError(f"unknown command {cfg.command!r}")  # pragma: no cover


def main(argv=None) -> int:
    cfg = parse_args(argv)
    try:
        return dispatch(cfg)
    except VerificationFailure as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1
    except (InputError, NonConvergence, NegativeRadicand) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
