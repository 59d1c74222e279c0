"""Write (k, predicted_density, mean_observed_density) rows for a k sweep.

usage: python scripts/plot_data.py N K_MIN K_MAX TRIALS [OUT]
"""
import sys

from dotenv import load_dotenv

from densegreedy import deps
from densegreedy.experiments import emit_plot_data, sweep_greedy_density

load_dotenv()
deps.configure_logging()

n, k_min, k_max, trials = (int(x) for x in sys.argv[1:5])
out = sys.argv[5] if len(sys.argv) > 5 else "plot_data.csv"

points = sweep_greedy_density(n, range(k_min, k_max + 1), trials, master_seed=0)
emit_plot_data(points, out)
print("Wrote", len(points), "points to", out)
