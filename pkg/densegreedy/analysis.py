# densegreedy/analysis.py
"""Analytical side of the partitioned greedy algorithm on G(n, 1/2).

Logs are base 2 throughout; the only natural log is the ln(log2 n) inside
m = n / (2k ln(log2 n)). All o(1) terms are dropped. Wherever an entropy
approximation 2^{(H(d)-1)i} would stand, the exact binomial tail is used instead.
"""
from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import integrate, optimize, special

from densegreedy import deps
from densegreedy.errors import ArgumentError, DegenerateThresholdError, NTooSmallError

logger = logging.getLogger(__name__)

LOG2E = math.log2(math.e)
BISECT_XTOL = 1e-12
EXACT_TAIL_MAX_I = 64
EXACT_COUNT_MAX_PAIRS = 400
DELTA_MAX_DENOMINATOR = 10**6
DEFAULT_DELTA = 0.049


def _check_unit(name: str, x: float, hi: float = 1.0) -> float:
    x = float(x)
    if not 0.0 <= x <= hi:
        raise ArgumentError(f"{name} must lie in [0, {hi}], got {x}")
    return x


def _check_int(name: str, x, lo: int = 0) -> int:
    if isinstance(x, bool) or int(x) != x or x < lo:
        raise ArgumentError(f"{name} must be an integer >= {lo}, got {x!r}")
    return int(x)


# ============================================================
# Entropy
# ============================================================
def _h(d: float) -> float:
    return float((special.entr(d) + special.entr(1.0 - d)) / math.log(2))


def entropy(d: float) -> float:
    """Binary Shannon entropy in bits, with 0 log 0 = 0."""
    return _h(_check_unit("d", d))


def inverse_entropy(y: float) -> float:
    """The d in [0, 1/2] with entropy(d) = y, by bisection to 1e-12."""
    y = _check_unit("y", y)
    if y == 0.0:
        return 0.0
    if y == 1.0:
        return 0.5
    return float(optimize.bisect(lambda d: _h(d) - y, 0.0, 0.5, xtol=BISECT_XTOL, maxiter=200))


# ============================================================
# Binomial tails of Bin(i, 1/2)
# ============================================================
def _check_tail(i, t) -> tuple[int, int]:
    i = _check_int("i", i)
    t = _check_int("t", t)
    if t > i:
        raise ArgumentError(f"tail start t={t} exceeds i={i}")
    return i, t


def _tail_numerator(i: int, t: int) -> int:
    return sum(math.comb(i, j) for j in range(t, i + 1))


def binomial_tail(i: int, t: int, *, exact: bool = False) -> float | Fraction:
    """P(Bin(i, 1/2) >= t). Exact integers up to i = 64 (or always when ``exact``),
    log-domain summation beyond."""
    i, t = _check_tail(i, t)
    if exact or i <= EXACT_TAIL_MAX_I:
        frac = Fraction(_tail_numerator(i, t), 1 << i)
        return frac if exact else float(frac)
    return 2.0 ** log2_binomial_tail(i, t)


def log2_binomial_tail(i: int, t: int) -> float:
    i, t = _check_tail(i, t)
    if i <= EXACT_TAIL_MAX_I:
        return math.log2(_tail_numerator(i, t)) - i
    j = np.arange(t, i + 1, dtype=np.float64)
    log_terms = special.gammaln(i + 1) - special.gammaln(j + 1) - special.gammaln(i - j + 1)
    return float(special.logsumexp(log_terms) / math.log(2)) - i


def entropy_tail_bounds(i: int, d: float) -> tuple[float, float]:
    """Entropy sandwich around binomial_tail(i, ceil((1-d) i)).

    Uses the effective fraction e = (i - t)/i of allowed misses, which is what the
    ceiling actually admits; e <= d, so the upper bound also holds with H(d).
    """
    i = _check_int("i", i, lo=1)
    d = _check_unit("d", d, 0.5)
    t = math.ceil((1.0 - d) * i)
    e = (i - t) / i
    exponent = (_h(e) - 1.0) * i
    return 2.0 ** (exponent - math.log2(i + 1)), (i + 1) * 2.0 ** exponent


def dense_edge_threshold(k: int, delta: float) -> int:
    """ceil((1 - delta) C(k, 2)), with delta read as its nearest fraction of
    denominator <= 10^6 so 0.1 or 0.3 behave as the decimals they are written as."""
    k = _check_int("k", k)
    delta = _check_unit("delta", delta)
    frac = Fraction(delta).limit_denominator(DELTA_MAX_DENOMINATOR)
    return math.ceil((1 - frac) * math.comb(k, 2))


# ============================================================
# Greedy analysis: schedule, step and k-step bounds
# ============================================================
def m_parameter(n: int, k: int) -> float:
    n = _check_int("n", n)
    k = _check_int("k", k, lo=1)
    if n < 3:
        raise NTooSmallError(f"ln(log2 n) is not positive for n={n}")
    return n / (2 * k * math.log(math.log2(n)))


def _checked_m(n: int, k: int) -> float:
    m = m_parameter(n, k)
    if m <= 1:
        raise NTooSmallError(f"m = n / (2k ln(log2 n)) = {m:.4g} <= 1 for n={n}, k={k}")
    return m


@lru_cache(maxsize=256)
def _schedule(n: int, k: int) -> tuple[float, ...]:
    log_m = math.log2(_checked_m(n, k))
    out = []
    for i in range(k):
        if i == 0 or 1.0 - log_m / i <= 0.0:
            out.append(0.0)
        else:
            out.append(min(0.5, max(0.0, inverse_entropy(1.0 - log_m / i))))
    return tuple(out)


def delta_schedule(n: int, k: int) -> tuple[float, ...]:
    """Minimal d_i with H(d_i) >= 1 - log2(m)/i for i = 0..k-1 (zero on the clique prefix)."""
    return _schedule(_check_int("n", n), _check_int("k", k, lo=1))


def lemma1_success_bound(n: int, k: int, i: int, d: float) -> float:
    """1 - (1 - P(Bin(i,1/2) >= ceil((1-d) i)))^{floor(n/k)}: the chance that the best
    of the floor(n/k) candidates in cell i+1 gains at least (1-d) i edges."""
    n = _check_int("n", n, lo=1)
    k = _check_int("k", k, lo=1)
    i = _check_int("i", i)
    if i >= k or k > n:
        raise ArgumentError(f"need 0 <= i < k <= n, got i={i}, k={k}, n={n}")
    d = _check_unit("d", d, 0.5)
    if i == 0:
        return 1.0
    tail = binomial_tail(i, math.ceil((1.0 - d) * i))
    if tail >= 1.0:
        return 1.0
    return float(-math.expm1((n // k) * math.log1p(-tail)))


def lemma2_success_bound(n: int, k: int) -> float:
    """Product of the per-step bounds over the schedule (steps use disjoint cells)."""
    schedule = delta_schedule(n, k)
    return math.prod(lemma1_success_bound(n, k, i, d) for i, d in enumerate(schedule))


def predicted_edges_lower_bound(n: int, k: int) -> float:
    return math.fsum((1.0 - d) * i for i, d in enumerate(delta_schedule(n, k)))


def _density_integrand(x: float) -> float:
    # 1 - 1/(1+x) written as x/(1+x) to avoid cancellation near 0
    return (1.0 + x) * inverse_entropy(x / (1.0 + x))


def density_integral(alpha: float, tol: float | None = None) -> float:
    """∫_0^alpha (1+x) H^{-1}(1 - 1/(1+x)) dx by adaptive quadrature to absolute error tol."""
    tol = deps.QUAD_TOL if tol is None else float(tol)
    if not tol > 0:
        raise ArgumentError(f"tol must be positive, got {tol}")
    alpha = float(alpha)
    if not alpha >= 0:
        raise ArgumentError(f"alpha must be >= 0, got {alpha}")
    if alpha == 0.0:
        return 0.0
    value, err = integrate.quad(_density_integrand, 0.0, alpha, epsabs=tol, epsrel=0.0, limit=500)
    logger.debug("density_integral(%s) = %.12g (+/- %.2g)", alpha, value, err)
    return float(value)


def asymptotic_density(tol: float | None = None) -> float:
    """Limit of the integral-form density prediction at k = 2 log2 n (alpha -> 1)."""
    return 1.0 - density_integral(1.0, tol) / 2.0


@dataclass(frozen=True)
class DensityPrediction:
    discrete: float
    integral: float
    alpha: float
    log2_m: float


@lru_cache(maxsize=256)
def _prediction(n: int, k: int, tol: float) -> DensityPrediction:
    log_m = math.log2(_checked_m(n, k))
    pairs = math.comb(k, 2)
    alpha = (k - 1) / log_m - 1.0
    discrete = predicted_edges_lower_bound(n, k) / pairs
    if alpha <= 0.0:
        integral = 1.0
    else:
        integral = 1.0 - log_m**2 / pairs * density_integral(alpha, tol)
    return DensityPrediction(discrete=discrete, integral=integral, alpha=alpha, log2_m=log_m)


def predicted_density(n: int, k: int, tol: float | None = None) -> DensityPrediction:
    """Discrete-sum and integral-form density predictions (both 1 in the clique regime)."""
    n = _check_int("n", n)
    k = _check_int("k", k, lo=2)
    return _prediction(n, k, deps.QUAD_TOL if tol is None else float(tol))


# ============================================================
# Clique number and the first-moment bound
# ============================================================
def clique_number_estimate(n: int) -> int:
    n = _check_int("n", n)
    if n < 4:
        raise ArgumentError(f"clique_number_estimate needs n >= 4, got {n}")
    log_n = math.log2(n)
    return math.ceil(2 * log_n - 2 * math.log2(log_n) - 1)


def expected_dense_subgraph_count(n: int, k: int, delta: float) -> float:
    """log2 of E[#size-k sets with density >= 1 - delta] = log2(C(n,k) · tail)."""
    n = _check_int("n", n)
    k = _check_int("k", k, lo=2)
    if k > n:
        raise ArgumentError(f"need k <= n, got k={k}, n={n}")
    delta = _check_unit("delta", delta, 0.5)
    pairs = math.comb(k, 2)
    t = dense_edge_threshold(k, delta)
    if pairs <= EXACT_COUNT_MAX_PAIRS:
        return math.log2(math.comb(n, k) * _tail_numerator(pairs, t)) - pairs
    log2_choose = float(special.gammaln(n + 1) - special.gammaln(k + 1) - special.gammaln(n - k + 1)) / math.log(2)
    return log2_choose + log2_binomial_tail(pairs, t)


@dataclass(frozen=True)
class SizeThreshold:
    value: float
    coefficient: float


def size_threshold(delta: float, n: int) -> SizeThreshold:
    """(2 log2 n + 2 log2 e)/(1 - H(delta)) + 1 and its leading coefficient 2/(1 - H(delta))."""
    delta = float(delta)
    if delta < 0:
        raise ArgumentError(f"delta must be >= 0, got {delta}")
    if not delta < 0.5:
        raise DegenerateThresholdError(f"H(delta) = 1 at delta >= 1/2; got delta={delta}")
    n = _check_int("n", n, lo=2)
    slack = 1.0 - _h(delta)
    return SizeThreshold(
        value=(2 * math.log2(n) + 2 * LOG2E) / slack + 1.0,
        coefficient=2.0 / slack,
    )


def gap_ratio(delta: float) -> float:
    """First-moment size coefficient over the greedy's 2 log n."""
    return size_threshold(delta, 2).coefficient / 2.0


# ============================================================
# Report
# ============================================================
@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    delta: float
    m: float
    log2_m: float
    delta_schedule: tuple[float, ...]
    predicted_edges: float
    predicted_density: float
    predicted_density_integral: float
    alpha: float
    integral_value: float
    lemma2_success_bound: float
    size_threshold: float
    threshold_coefficient: float
    gap_ratio: float
    expected_count: float

    def to_dict(self) -> dict:
        out = asdict(self)
        out["delta_schedule"] = list(self.delta_schedule)
        return out

    def to_text(self) -> str:
        rows = self.to_dict()
        schedule = rows.pop("delta_schedule")
        width = max(len(key) for key in rows)
        lines = [f"{key:<{width}}  {_fmt(value)}" for key, value in rows.items()]
        lines.append(f"{'delta_schedule':<{width}}  " + " ".join(f"{d:.6f}" for d in schedule))
        return "\n".join(lines) + "\n"


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    return "-" if value is None else str(value)


def bound_report(n: int, k: int, delta: float = DEFAULT_DELTA, tol: float | None = None) -> BoundReport:
    if k > n:
        raise ArgumentError(f"need k <= n, got k={k}, n={n}")
    pred = predicted_density(n, k, tol)
    threshold = size_threshold(delta, n)
    return BoundReport(
        n=n,
        k=k,
        delta=delta,
        m=m_parameter(n, k),
        log2_m=pred.log2_m,
        delta_schedule=delta_schedule(n, k),
        predicted_edges=predicted_edges_lower_bound(n, k),
        predicted_density=pred.discrete,
        predicted_density_integral=pred.integral,
        alpha=pred.alpha,
        integral_value=density_integral(max(pred.alpha, 0.0), tol),
        lemma2_success_bound=lemma2_success_bound(n, k),
        size_threshold=threshold.value,
        threshold_coefficient=threshold.coefficient,
        gap_ratio=threshold.coefficient / 2.0,
        expected_count=expected_dense_subgraph_count(n, k, delta),
    )
