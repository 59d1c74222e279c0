import pytest

from densegreedy.decisions import judge_summary, judge_trial
from densegreedy.models import ExperimentConfig, Mode


@pytest.mark.parametrize(
    "mode, observed, predicted, passed, reason",
    [
        (Mode.GREEDY_DENSITY, 0.86, 0.85, True, "density_within_tolerance"),
        (Mode.GREEDY_DENSITY, 0.80, 0.85, False, "density_outside_tolerance"),
        (Mode.LEMMA2_EDGES, 323, 322.9, True, "edges_meet_bound"),
        (Mode.LEMMA2_EDGES, 322, 322.9, False, "edges_below_bound"),
        (Mode.CLIQUE_BASELINE, 7, 8.0, True, "clique_size_within_band"),
        (Mode.CLIQUE_BASELINE, 3, 8.0, False, "clique_size_outside_band"),
        (Mode.FIRST_MOMENT, 80, 92.0, True, "sampled"),
        (Mode.THRESHOLD_SCAN, {18: False, 19: False}, 0, True, "none_above_threshold"),
    ],
)
def test_judge_trial(mode, observed, predicted, passed, reason):
    ok, meta = judge_trial(mode, observed, predicted)
    assert ok is passed
    assert meta["reasons"] == [reason]


def test_judge_trial_lists_every_failing_step():
    ok, meta = judge_trial(Mode.LEMMA1_RATE, [0, 1, 1, 1], [0, 1, 2, 2])
    assert not ok
    assert meta["reasons"] == ["step_2_below_threshold", "step_3_below_threshold"]
    ok, meta = judge_trial(Mode.THRESHOLD_SCAN, {18: True, 19: False, 20: True}, 0)
    assert meta["reasons"] == ["dense_subgraph_at_k_18", "dense_subgraph_at_k_20"]


def test_judge_summary_pass_rate_gate():
    config = ExperimentConfig(mode="lemma2-edges", n=1024)
    assert judge_summary(config, [300.0], 0.4, {})[0] is False
    assert judge_summary(config, [300.0], 0.6, {}) == (True, {"reasons": ["criteria_met"]})
    assert judge_summary(config, [], 1.0, {})[1]["reasons"] == ["no_completed_trials"]


def test_judge_summary_per_mode():
    density = ExperimentConfig(mode="greedy-density", n=1024)
    assert judge_summary(density, [0.85, 0.86], 1.0, {"predicted": 0.855})[0]
    assert not judge_summary(density, [0.80, 0.81], 1.0, {"predicted": 0.855})[0]

    rates = ExperimentConfig(mode="lemma1-rate", n=1024)
    extras = {"step_rates": [1.0, 0.9], "step_bounds": [1.0, 0.99], "step_se": [0.0, 0.01]}
    assert not judge_summary(rates, [1.0], 1.0, extras)[0]
    extras["step_rates"] = [1.0, 0.97]
    assert judge_summary(rates, [1.0], 1.0, extras)[0]

    clique = ExperimentConfig(mode="clique-baseline", n=256)
    assert judge_summary(clique, [7.0, 8.0], 1.0, {"log2_n": 8.0})[0]
    assert not judge_summary(clique, [5.0, 6.0], 1.0, {"log2_n": 8.0})[0]

    moment = ExperimentConfig(mode="first-moment", n=18, k=5)
    assert not judge_summary(moment, [90.0], 1.0, {"agrees": False})[0]
