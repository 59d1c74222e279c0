# densegreedy/experiments.py
"""Seeded Monte Carlo runs comparing the greedy algorithm and the oracles with the
analytical predictions.

Seeding: trial i of a run uses ``trial_seed(master_seed, i)``; the graph is drawn
from that seed and the vertex partition from ``partition_seed(trial_seed)``. Both are
SplitMix64 finalisers, so a run is reproducible from its config alone.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache, partial
from pathlib import Path
from typing import IO, Iterable, Sequence

import numpy as np

from densegreedy import deps
from densegreedy.analysis import (
    delta_schedule,
    expected_dense_subgraph_count,
    lemma1_success_bound,
    predicted_density,
    predicted_edges_lower_bound,
    size_threshold,
)
from densegreedy.decisions import STANDARD_ERRORS, judge_summary, judge_trial
from densegreedy.errors import ArgumentError, DenseGreedyError
from densegreedy.graph import generate_gnp
from densegreedy.greedy import greedy_dense, partition_vertices, plain_greedy_clique
from densegreedy.models import (
    ExperimentConfig,
    ExperimentResult,
    Mode,
    OutputFormat,
    PlotPoint,
    Summary,
    TrialRecord,
)
from densegreedy.oracle import count_dense_subgraphs, find_dense_subgraph

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
P_HALF = 0.5

CSV_HEADER = ["trial_index", "seed", "statistic", "observed", "predicted", "passed", "detail", "error"]
PLOT_HEADER = ["k", "predicted_density", "mean_observed_density"]

STATISTICS = {
    Mode.GREEDY_DENSITY: "final_density",
    Mode.LEMMA1_RATE: "steps_met",
    Mode.LEMMA2_EDGES: "final_edges",
    Mode.CLIQUE_BASELINE: "greedy_clique_size",
    Mode.FIRST_MOMENT: "dense_subgraph_count",
    Mode.THRESHOLD_SCAN: "dense_sizes_above_threshold",
}


# ============================================================
# Seeds
# ============================================================
def _mix(base: int, index: int) -> int:
    z = (base + (index + 1) * GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seed(master_seed: int, trial_index: int) -> int:
    return _mix(master_seed, trial_index)


def partition_seed(seed: int) -> int:
    return _mix(seed, 1)


def _r(x) -> float:
    """12 significant digits; records are stored already rounded."""
    return float(f"{float(x):.12g}")


# ============================================================
# Cached predictions (shared by every trial of a run)
# ============================================================
@lru_cache(maxsize=64)
def _lemma1_targets(n: int, k: int) -> tuple[tuple[int, ...], tuple[float, ...]]:
    """Per-step edge thresholds ceil((1 - d_i) i) and their success bounds."""
    schedule = delta_schedule(n, k)
    thresholds = tuple(math.ceil((1.0 - d) * i) for i, d in enumerate(schedule))
    bounds = tuple(lemma1_success_bound(n, k, i, d) for i, d in enumerate(schedule))
    return thresholds, bounds


def scan_sizes(config: ExperimentConfig) -> list[int]:
    """Subset sizes probed by threshold-scan: ceil(threshold) +/- scan_width within [2, n]."""
    k0 = math.ceil(size_threshold(config.delta, config.n).value)
    return list(range(max(2, k0 - config.scan_width), min(config.n, k0 + config.scan_width) + 1))


# ============================================================
# One trial
# ============================================================
def _greedy_trace(config: ExperimentConfig, seed: int):
    g = generate_gnp(config.n, P_HALF, seed)
    return greedy_dense(g, partition_vertices(config.n, config.k, partition_seed(seed)))


def _observe(config: ExperimentConfig, seed: int):
    """(observed, predicted, judged observation, judged prediction, detail) for one trial."""
    n, k = config.n, config.k
    mode = config.mode

    if mode is Mode.GREEDY_DENSITY:
        trace = _greedy_trace(config, seed)
        predicted = predicted_density(n, k).discrete
        return trace.final_density, predicted, trace.final_density, predicted, list(trace.final_set)

    if mode is Mode.LEMMA1_RATE:
        trace = _greedy_trace(config, seed)
        thresholds, bounds = _lemma1_targets(n, k)
        gained = trace.gained
        met = sum(got >= need for got, need in zip(gained, thresholds))
        return met, math.fsum(bounds), gained, thresholds, gained

    if mode is Mode.LEMMA2_EDGES:
        trace = _greedy_trace(config, seed)
        predicted = predicted_edges_lower_bound(n, k)
        return trace.final_edges, predicted, trace.final_edges, predicted, list(trace.final_set)

    if mode is Mode.CLIQUE_BASELINE:
        clique = plain_greedy_clique(generate_gnp(n, P_HALF, seed))
        predicted = math.log2(n)
        return len(clique), predicted, len(clique), predicted, list(clique)

    if mode is Mode.FIRST_MOMENT:
        g = generate_gnp(n, P_HALF, seed)
        count = count_dense_subgraphs(g, k, config.delta, budget=config.count_budget)
        expected = 2.0 ** expected_dense_subgraph_count(n, k, config.delta)
        return count, expected, count, expected, []

    if mode is Mode.THRESHOLD_SCAN:
        g = generate_gnp(n, P_HALF, seed)
        k0 = math.ceil(size_threshold(config.delta, n).value)
        found = {
            size: find_dense_subgraph(g, size, config.delta, budget=config.count_budget) is not None
            for size in scan_sizes(config)
        }
        above = {size: hit for size, hit in found.items() if size >= k0}
        return sum(above.values()), 0, above, 0, [int(hit) for hit in found.values()]

    raise ArgumentError(f"unknown mode {mode!r}")


def run_trial(config: ExperimentConfig, trial_index: int) -> TrialRecord:
    seed = trial_seed(config.master_seed, trial_index)
    statistic = STATISTICS[config.mode]
    try:
        observed, predicted, judged, target, detail = _observe(config, seed)
    except DenseGreedyError as e:
        logger.warning("trial %d (seed %d) failed: %s", trial_index, seed, e)
        return TrialRecord(
            trial_index=trial_index,
            seed=seed,
            statistic=statistic,
            passed=False,
            reasons=["trial_error"],
            error=f"{e.kind}: {e}",
        )
    passed, meta = judge_trial(config.mode, judged, target)
    return TrialRecord(
        trial_index=trial_index,
        seed=seed,
        statistic=statistic,
        observed=_r(observed),
        predicted=_r(predicted),
        passed=passed,
        detail=[int(x) for x in detail],
        reasons=meta["reasons"],
    )


# ============================================================
# Aggregation
# ============================================================
def _mode_extras(config: ExperimentConfig, completed: Sequence[TrialRecord]) -> dict:
    mode = config.mode
    n, k = config.n, config.k
    count = len(completed)

    if mode is Mode.GREEDY_DENSITY:
        return {"predicted": _r(predicted_density(n, k).discrete)}

    if mode is Mode.LEMMA1_RATE:
        thresholds, bounds = _lemma1_targets(n, k)
        rates, ses = [], []
        for i, (need, bound) in enumerate(zip(thresholds, bounds)):
            hits = sum(r.detail[i] >= need for r in completed)
            rates.append(_r(hits / count) if count else None)
            ses.append(_r(math.sqrt(bound * (1.0 - bound) / count)) if count else None)
        return {
            "step_thresholds": list(thresholds),
            "step_bounds": [_r(b) for b in bounds],
            "step_rates": rates,
            "step_se": ses,
        }

    if mode is Mode.LEMMA2_EDGES:
        return {"predicted_edges": _r(predicted_edges_lower_bound(n, k))}

    if mode is Mode.CLIQUE_BASELINE:
        return {"log2_n": _r(math.log2(n))}

    if mode is Mode.FIRST_MOMENT:
        expected = 2.0 ** expected_dense_subgraph_count(n, k, config.delta)
        if count < 2:
            return {"expected": _r(expected), "standard_error": None, "agrees": False}
        values = np.array([r.observed for r in completed])
        se = float(np.std(values, ddof=1)) / math.sqrt(count)
        agrees = abs(float(values.mean()) - expected) <= STANDARD_ERRORS * se
        return {"expected": _r(expected), "standard_error": _r(se), "agrees": bool(agrees)}

    if mode is Mode.THRESHOLD_SCAN:
        sizes = scan_sizes(config)
        rates = [_r(sum(r.detail[j] for r in completed) / count) if count else None for j in range(len(sizes))]
        threshold = size_threshold(config.delta, n).value
        return {
            "threshold": _r(threshold),
            "k_min": math.ceil(threshold),
            "scan_sizes": sizes,
            "existence_rates": rates,
        }

    return {}


def summarize(config: ExperimentConfig, records: Sequence[TrialRecord]) -> Summary:
    completed = [r for r in records if r.error is None]
    values = [r.observed for r in completed]
    pass_rate = sum(r.passed is True for r in records) / len(records) if records else 0.0
    extras = _mode_extras(config, completed) if completed else {}
    verdict, meta = judge_summary(config, values, pass_rate, extras)

    stats = {}
    if values:
        arr = np.array(values, dtype=np.float64)
        stats = {
            "mean": _r(arr.mean()),
            "std": _r(arr.std(ddof=1)) if arr.size >= 2 else None,
            "min": _r(arr.min()),
            "max": _r(arr.max()),
        }
    return Summary(
        trials=len(records),
        completed=len(completed),
        failed=len(records) - len(completed),
        pass_rate=_r(pass_rate),
        min_pass_rate=config.min_pass_rate,
        verdict=verdict,
        reasons=meta["reasons"],
        extras=extras,
        **stats,
    )


# ============================================================
# Runs
# ============================================================
def run_experiment(config: ExperimentConfig, workers: int | None = None) -> ExperimentResult:
    workers = deps.WORKERS if workers is None else int(workers)
    if workers < 1:
        raise ArgumentError(f"workers must be >= 1, got {workers}")
    seeds = [trial_seed(config.master_seed, i) for i in range(config.trials)]
    if len(set(seeds)) != len(seeds):
        raise ArgumentError(f"trial seeds collide for master_seed={config.master_seed}")

    logger.info(
        "experiment %s: n=%d k=%d delta=%s trials=%d workers=%d",
        config.mode.value, config.n, config.k, config.delta, config.trials, workers,
    )
    job = partial(run_trial, config)
    if workers == 1 or config.trials == 1:
        records = [job(i) for i in range(config.trials)]
    else:
        # map() yields in submission order, so records stay sorted by trial_index
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(job, range(config.trials)))

    summary = summarize(config, records)
    logger.info(
        "experiment %s done: completed=%d failed=%d pass_rate=%s verdict=%s",
        config.mode.value, summary.completed, summary.failed, summary.pass_rate, summary.verdict,
    )
    return ExperimentResult(config=config, records=records, summary=summary)


def sweep_greedy_density(
    n: int,
    ks: Iterable[int],
    trials: int,
    master_seed: int = 0,
    workers: int | None = None,
) -> list[PlotPoint]:
    """Mean greedy density against the prediction for each k (one run per k)."""
    points = []
    for k in ks:
        config = ExperimentConfig(mode=Mode.GREEDY_DENSITY, n=n, k=k, trials=trials, master_seed=master_seed)
        result = run_experiment(config, workers=workers)
        if result.summary.mean is None:
            raise ArgumentError(f"no completed trials for k={k}")
        points.append(
            PlotPoint(
                k=k,
                predicted_density=_r(predicted_density(n, k).discrete),
                mean_observed_density=result.summary.mean,
            )
        )
    return points


# ============================================================
# Output
# ============================================================
def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def render_csv(result: ExperimentResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in result.records:
        w.writerow([
            r.trial_index,
            r.seed,
            r.statistic,
            _fmt(r.observed),
            _fmt(r.predicted),
            _fmt(r.passed),
            ";".join(str(x) for x in r.detail),
            _fmt(r.error),
        ])
    return buf.getvalue()


def render_json(result: ExperimentResult) -> str:
    return json.dumps(result.model_dump(mode="json"), indent=2) + "\n"


def render_plot(points: Sequence[PlotPoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(PLOT_HEADER)
    w.writerows((p.k, _fmt(p.predicted_density), _fmt(p.mean_observed_density)) for p in points)
    return buf.getvalue()


def _write(text: str, dest: str | Path | IO[str]) -> None:
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        dest.write(text)


def emit_report(result: ExperimentResult, dest: str | Path | IO[str], fmt: OutputFormat | None = None) -> None:
    """Write the run as CSV (one row per trial) or JSON ({config, records, summary})."""
    if not result.records:
        raise ArgumentError("nothing to report: no trial records")
    fmt = OutputFormat(fmt or result.config.format)
    if fmt is OutputFormat.CSV:
        _write(render_csv(result), dest)
    elif fmt is OutputFormat.JSON:
        _write(render_json(result), dest)
    else:
        raise ArgumentError("plot output comes from a k sweep; use emit_plot_data")


def emit_plot_data(points: Sequence[PlotPoint], dest: str | Path | IO[str]) -> None:
    if not points:
        raise ArgumentError("nothing to plot")
    _write(render_plot(points), dest)
