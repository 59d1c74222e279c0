"""Desk-scale runs (minutes each). Deselected by default; run with ``pytest -m slow``."""
import math

import pytest

from densegreedy.analysis import clique_number_estimate, predicted_density
from densegreedy.experiments import run_experiment
from densegreedy.graph import generate_gnp
from densegreedy.models import ExperimentConfig
from densegreedy.oracle import max_clique_exact

pytestmark = pytest.mark.slow


def test_lemma1_step_rates_meet_bounds():
    result = run_experiment(ExperimentConfig(mode="lemma1-rate", n=2**14, k=28, trials=200))
    assert result.summary.verdict, result.summary.reasons


def test_greedy_density_and_edge_bound():
    density = run_experiment(ExperimentConfig(mode="greedy-density", n=2**14, k=28, trials=200))
    assert abs(density.summary.mean - predicted_density(2**14, 28).discrete) <= 0.02
    assert density.summary.verdict
    # the exact probability of meeting the edge bound here is about 0.66
    edges = run_experiment(ExperimentConfig(mode="lemma2-edges", n=2**14, k=28, trials=200))
    assert edges.summary.verdict
    assert edges.summary.pass_rate >= 0.5


def test_first_moment_agreement():
    result = run_experiment(ExperimentConfig(mode="first-moment", n=18, k=5, delta=0.1, trials=2000))
    assert result.summary.extras["expected"] == pytest.approx(92.039, rel=1e-4)
    assert result.summary.extras["agrees"]
    assert result.summary.verdict


def test_no_dense_subgraphs_past_threshold():
    config = ExperimentConfig(mode="threshold-scan", n=24, delta=0.049, trials=100, scan_width=0)
    result = run_experiment(config)
    assert result.summary.extras["k_min"] == 18
    assert result.summary.pass_rate >= 0.95
    assert result.summary.verdict


def test_clique_number_band():
    assert clique_number_estimate(128) == 8
    # expected counts of 9-, 10-, 11-cliques in G(128, 1/2) are ~277, 6.4, 0.07
    sizes = [len(max_clique_exact(generate_gnp(128, 0.5, seed))) for seed in range(20)]
    assert sum(size in (9, 10, 11) for size in sizes) >= math.ceil(0.9 * 20)
