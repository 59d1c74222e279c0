import csv
import io
import json
import math

import pytest
from pydantic import ValidationError

from densegreedy.analysis import predicted_density, predicted_edges_lower_bound
from densegreedy.errors import ArgumentError
from densegreedy.experiments import (
    CSV_HEADER,
    emit_plot_data,
    emit_report,
    partition_seed,
    render_csv,
    render_json,
    run_experiment,
    scan_sizes,
    summarize,
    sweep_greedy_density,
    trial_seed,
)
from densegreedy.greedy import default_k
from densegreedy.models import ExperimentConfig, ExperimentResult, Mode, OutputFormat


# ---------- seeds ----------
def test_trial_seeds_are_distinct_and_stable():
    seeds = [trial_seed(2024, i) for i in range(10_000)]
    assert len(set(seeds)) == len(seeds)
    assert all(0 <= s < 1 << 64 for s in seeds)
    assert seeds[:5] == [trial_seed(2024, i) for i in range(5)]
    assert trial_seed(2024, 0) != trial_seed(2025, 0)
    assert partition_seed(seeds[0]) != seeds[0]


# ---------- config ----------
def test_config_fills_defaults():
    config = ExperimentConfig(mode="lemma2-edges", n=1024)
    assert config.k == default_k(1024) == 20
    assert config.delta == 0.049
    assert config.min_pass_rate == 0.5
    assert ExperimentConfig(mode="threshold-scan", n=24).min_pass_rate == 0.95
    assert ExperimentConfig(mode="greedy-density", n=24).min_pass_rate is None
    assert ExperimentConfig(mode="lemma2-edges", n=1024, min_pass_rate=None).min_pass_rate is None


@pytest.mark.parametrize(
    "fields",
    [
        {"mode": "greedy-density", "n": 10, "k": 11},
        {"mode": "greedy-density", "n": 10, "trials": 0},
        {"mode": "greedy-density", "n": 10, "delta": 0.5},
        {"mode": "greedy-density", "n": 10, "master_seed": 1 << 64},
        {"mode": "greedy-density", "n": 10, "colour": "red"},
        {"mode": "first-moment", "n": 10, "k": 1},
        {"mode": "no-such-mode", "n": 10},
    ],
)
def test_config_rejects_bad_fields(fields):
    with pytest.raises(ValidationError):
        ExperimentConfig(**fields)


# ---------- runs per mode ----------
def test_greedy_density_run():
    config = ExperimentConfig(mode="greedy-density", n=256, trials=4, master_seed=1)
    result = run_experiment(config)
    assert [r.trial_index for r in result.records] == [0, 1, 2, 3]
    assert [r.seed for r in result.records] == [trial_seed(1, i) for i in range(4)]
    predicted = predicted_density(256, 16).discrete
    for r in result.records:
        assert r.statistic == "final_density"
        assert 0.0 <= r.observed <= 1.0
        assert r.predicted == pytest.approx(predicted, abs=1e-11)
        assert len(r.detail) == 16
        assert r.passed == (abs(r.observed - r.predicted) <= 0.02)
    assert result.summary.extras["predicted"] == pytest.approx(predicted, abs=1e-11)


def test_lemma1_rate_run():
    config = ExperimentConfig(mode="lemma1-rate", n=1024, k=20, trials=6)
    result = run_experiment(config)
    extras = result.summary.extras
    assert len(extras["step_rates"]) == len(extras["step_bounds"]) == len(extras["step_se"]) == 20
    assert extras["step_rates"][0] == 1.0
    assert extras["step_bounds"][0] == 1.0
    for r in result.records:
        assert len(r.detail) == 20
        met = sum(g >= t for g, t in zip(r.detail, extras["step_thresholds"]))
        assert r.observed == met


def test_lemma2_edges_run():
    config = ExperimentConfig(mode="lemma2-edges", n=1024, k=20, trials=8)
    result = run_experiment(config)
    bound = predicted_edges_lower_bound(1024, 20)
    for r in result.records:
        assert r.predicted == pytest.approx(bound, abs=1e-9)
        assert r.passed == (r.observed >= r.predicted)
    assert result.summary.pass_rate == sum(r.passed for r in result.records) / 8


def test_clique_baseline_run():
    result = run_experiment(ExperimentConfig(mode="clique-baseline", n=256, trials=20))
    assert all(r.predicted == 8.0 for r in result.records)
    assert result.summary.verdict
    assert 0.85 * 8 <= result.summary.mean <= 1.15 * 8


def test_first_moment_run():
    config = ExperimentConfig(mode="first-moment", n=12, k=4, delta=0.2, trials=20)
    result = run_experiment(config)
    extras = result.summary.extras
    assert extras["expected"] == pytest.approx(math.comb(12, 4) * 7 / 64)
    assert extras["standard_error"] > 0
    assert isinstance(extras["agrees"], bool)
    assert all(r.observed == int(r.observed) for r in result.records)


def test_threshold_scan_run():
    config = ExperimentConfig(mode="threshold-scan", n=20, trials=3)
    assert scan_sizes(config) == [16, 17, 18, 19, 20]
    result = run_experiment(config)
    assert result.summary.extras["k_min"] == 18
    assert result.summary.pass_rate == 1.0
    assert result.summary.verdict
    assert all(len(r.detail) == 5 for r in result.records)


def test_failed_trials_are_recorded():
    config = ExperimentConfig(mode="first-moment", n=20, k=6, trials=3, count_budget=10)
    result = run_experiment(config)
    assert all(r.error and r.error.startswith("resource:") for r in result.records)
    assert all(r.passed is False and r.observed is None for r in result.records)
    assert result.summary.completed == 0
    assert result.summary.failed == 3
    assert result.summary.mean is None
    assert not result.summary.verdict
    assert result.summary.reasons == ["no_completed_trials"]


def test_workers_do_not_change_results():
    config = ExperimentConfig(mode="lemma2-edges", n=512, trials=6, master_seed=3)
    assert run_experiment(config, workers=2) == run_experiment(config, workers=1)


def test_bad_worker_count():
    with pytest.raises(ArgumentError):
        run_experiment(ExperimentConfig(mode="greedy-density", n=64), workers=0)


# ---------- reports ----------
@pytest.fixture(scope="module")
def small_result():
    return run_experiment(ExperimentConfig(mode="greedy-density", n=128, trials=5, master_seed=42))


def test_runs_are_byte_identical(small_result):
    again = run_experiment(small_result.config)
    assert render_csv(again) == render_csv(small_result)
    assert render_json(again) == render_json(small_result)


def test_csv_report(small_result, tmp_path):
    path = tmp_path / "out.csv"
    emit_report(small_result, path)
    rows = list(csv.reader(io.StringIO(path.read_text())))
    assert rows[0] == CSV_HEADER
    assert len(rows) == 5 + 1
    assert rows[1][0] == "0"
    assert rows[1][5] in ("true", "false")
    assert rows[1][6].split(";") == [str(v) for v in small_result.records[0].detail]


def test_json_report_round_trip(small_result):
    buf = io.StringIO()
    emit_report(small_result, buf, OutputFormat.JSON)
    body = json.loads(buf.getvalue())
    assert set(body) == {"config", "records", "summary"}
    assert ExperimentResult.model_validate_json(buf.getvalue()) == small_result


def test_summary_recomputes_from_records(small_result):
    assert summarize(small_result.config, small_result.records) == small_result.summary
    values = [r.observed for r in small_result.records]
    assert small_result.summary.min == min(values)
    assert small_result.summary.max == max(values)


def test_report_errors(small_result, tmp_path):
    with pytest.raises(OSError):
        emit_report(small_result, tmp_path)
    with pytest.raises(ArgumentError):
        emit_report(small_result, io.StringIO(), OutputFormat.PLOT)


def test_plot_sweep():
    points = sweep_greedy_density(256, [10, 16], trials=2, master_seed=0)
    assert [p.k for p in points] == [10, 16]
    assert points[1].predicted_density == pytest.approx(predicted_density(256, 16).discrete, abs=1e-11)
    buf = io.StringIO()
    emit_plot_data(points, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "k,predicted_density,mean_observed_density"
    assert len(lines) == 3
    with pytest.raises(ArgumentError):
        emit_plot_data([], buf)


def test_mode_names():
    assert {m.value for m in Mode} == {
        "greedy-density", "lemma1-rate", "lemma2-edges", "clique-baseline", "first-moment", "threshold-scan",
    }
