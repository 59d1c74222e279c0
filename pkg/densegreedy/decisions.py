# densegreedy/decisions.py
"""Pass/fail rules for experiment trials and run summaries.

The thresholds here are desk-scale surrogates for statements that only hold as
n grows; they are configuration defaults, not theorems.
"""
from __future__ import annotations

import math
from typing import TYPE_CHECKING, Sequence

from densegreedy.models import Mode

if TYPE_CHECKING:
    from densegreedy.models import ExperimentConfig

DENSITY_TOLERANCE = 0.02
CLIQUE_TRIAL_BAND = (0.5, 1.5)
CLIQUE_MEAN_BAND = (0.85, 1.15)
STANDARD_ERRORS = 3.0


def judge_trial(mode: Mode, observed, predicted):
    """
    observed / predicted per mode:
      - greedy-density:  final density / predicted discrete density
      - lemma1-rate:     gained vector / per-step edge thresholds ceil((1-d_i) i)
      - lemma2-edges:    final edge count / predicted edge lower bound
      - clique-baseline: greedy clique size / log2 n
      - first-moment:    dense-subgraph count / expected count (linear scale)
      - threshold-scan:  {k: found} for k >= ceil(threshold) / 0
    Returns: (passed: bool, meta: dict(reasons=[...]))
    """
    reasons = []

    if mode is Mode.GREEDY_DENSITY:
        if abs(observed - predicted) > DENSITY_TOLERANCE:
            reasons.append("density_outside_tolerance")
            return False, {"reasons": reasons}
        reasons.append("density_within_tolerance")
        return True, {"reasons": reasons}

    if mode is Mode.LEMMA1_RATE:
        short = [i for i, (got, need) in enumerate(zip(observed, predicted)) if got < need]
        if short:
            reasons.extend(f"step_{i}_below_threshold" for i in short)
            return False, {"reasons": reasons}
        reasons.append("all_steps_met")
        return True, {"reasons": reasons}

    if mode is Mode.LEMMA2_EDGES:
        if observed < predicted:
            reasons.append("edges_below_bound")
            return False, {"reasons": reasons}
        reasons.append("edges_meet_bound")
        return True, {"reasons": reasons}

    if mode is Mode.CLIQUE_BASELINE:
        lo, hi = CLIQUE_TRIAL_BAND
        if not lo * predicted <= observed <= hi * predicted:
            reasons.append("clique_size_outside_band")
            return False, {"reasons": reasons}
        reasons.append("clique_size_within_band")
        return True, {"reasons": reasons}

    if mode is Mode.FIRST_MOMENT:
        # a single count is one sample; agreement is judged on the mean
        reasons.append("sampled")
        return True, {"reasons": reasons}

    if mode is Mode.THRESHOLD_SCAN:
        found = sorted(k for k, hit in observed.items() if hit)
        if found:
            reasons.extend(f"dense_subgraph_at_k_{k}" for k in found)
            return False, {"reasons": reasons}
        reasons.append("none_above_threshold")
        return True, {"reasons": reasons}

    raise ValueError(f"unknown mode {mode!r}")


def judge_summary(config: "ExperimentConfig", values: Sequence[float], pass_rate: float, extras: dict):
    """Run-level verdict. Returns (verdict: bool, meta: dict(reasons=[...]))."""
    mode = config.mode
    reasons = []

    if not values:
        reasons.append("no_completed_trials")
        return False, {"reasons": reasons}

    if config.min_pass_rate is not None and pass_rate < config.min_pass_rate:
        reasons.append("pass_rate_below_minimum")
        return False, {"reasons": reasons}

    mean = math.fsum(values) / len(values)

    if mode is Mode.GREEDY_DENSITY:
        if abs(mean - extras["predicted"]) > DENSITY_TOLERANCE:
            reasons.append("mean_density_outside_tolerance")
            return False, {"reasons": reasons}

    elif mode is Mode.LEMMA1_RATE:
        low = [
            i for i, (rate, bound, se) in enumerate(zip(extras["step_rates"], extras["step_bounds"], extras["step_se"]))
            if rate < bound - STANDARD_ERRORS * se
        ]
        if low:
            reasons.extend(f"step_{i}_rate_below_bound" for i in low)
            return False, {"reasons": reasons}

    elif mode is Mode.CLIQUE_BASELINE:
        lo, hi = CLIQUE_MEAN_BAND
        if not lo * extras["log2_n"] <= mean <= hi * extras["log2_n"]:
            reasons.append("mean_clique_size_outside_band")
            return False, {"reasons": reasons}

    elif mode is Mode.FIRST_MOMENT:
        if not extras["agrees"]:
            reasons.append("mean_count_outside_standard_errors")
            return False, {"reasons": reasons}

    reasons.append("criteria_met")
    return True, {"reasons": reasons}
