# densegreedy/models.py
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from densegreedy.graph import SEED_LIMIT
from densegreedy.greedy import default_k


class Mode(str, Enum):
    GREEDY_DENSITY = "greedy-density"
    LEMMA1_RATE = "lemma1-rate"
    LEMMA2_EDGES = "lemma2-edges"
    CLIQUE_BASELINE = "clique-baseline"
    FIRST_MOMENT = "first-moment"
    THRESHOLD_SCAN = "threshold-scan"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    PLOT = "plot"


# desk-scale surrogates; modes without an entry are judged on the summary statistics alone
DEFAULT_MIN_PASS_RATE = {
    Mode.LEMMA2_EDGES: 0.5,
    Mode.THRESHOLD_SCAN: 0.95,
}


class ExperimentConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    mode: Mode
    n: int = Field(ge=2)
    k: int = Field(ge=1)
    delta: float = Field(default=0.049, ge=0.0, lt=0.5)
    trials: int = Field(default=1, ge=1)
    master_seed: int = Field(default=0, ge=0, lt=SEED_LIMIT)
    format: OutputFormat = OutputFormat.CSV
    count_budget: int | None = Field(default=None, ge=1)
    min_pass_rate: float | None = Field(default=None, ge=0.0, le=1.0)
    scan_width: int = Field(default=2, ge=0)

    @model_validator(mode="before")
    @classmethod
    def _fill_defaults(cls, data):
        if isinstance(data, dict):
            data = dict(data)
            if data.get("k") is None and isinstance(data.get("n"), int):
                data["k"] = default_k(data["n"])
            if "min_pass_rate" not in data and data.get("mode") is not None:
                try:
                    data["min_pass_rate"] = DEFAULT_MIN_PASS_RATE.get(Mode(data["mode"]))
                except ValueError:
                    pass  # field validation reports the bad mode
        return data

    @model_validator(mode="after")
    def _check_k(self):
        if self.k > self.n:
            raise ValueError(f"need k <= n, got k={self.k}, n={self.n}")
        if self.mode is Mode.FIRST_MOMENT and self.k < 2:
            raise ValueError("first-moment counting needs k >= 2")
        return self


class TrialRecord(BaseModel):
    trial_index: int
    seed: int
    statistic: str
    observed: float | None = None
    predicted: float | None = None
    passed: bool | None = None
    detail: list[int] = []
    reasons: list[str] = []
    error: str | None = None


class Summary(BaseModel):
    trials: int
    completed: int
    failed: int
    mean: float | None = None
    std: float | None = None
    min: float | None = None
    max: float | None = None
    pass_rate: float | None = None
    min_pass_rate: float | None = None
    verdict: bool
    reasons: list[str] = []
    extras: dict = {}


class ExperimentResult(BaseModel):
    config: ExperimentConfig
    records: list[TrialRecord]
    summary: Summary


class PlotPoint(BaseModel):
    k: int
    predicted_density: float
    mean_observed_density: float


# ---------- HTTP request bodies ----------
class GraphSource(BaseModel):
    """Either a G(n, 1/2)-style draw (n, p, seed) or an explicit edge list on n vertices."""
    n: int = Field(ge=1)
    p: float = Field(default=0.5, ge=0.0, le=1.0)
    seed: int = Field(default=0, ge=0, lt=SEED_LIMIT)
    edges: list[tuple[int, int]] | None = None


class GenerateRequest(GraphSource):
    include_edges: bool = False


class GreedyRequest(GraphSource):
    k: int | None = Field(default=None, ge=1)
    partition_seed: int | None = Field(default=None, ge=0, lt=SEED_LIMIT)


class DensestRequest(GraphSource):
    k: int = Field(ge=2)
    budget: int | None = Field(default=None, ge=1)
    prune: bool = True


class CountRequest(GraphSource):
    k: int = Field(ge=2)
    delta: float = Field(default=0.049, ge=0.0, le=1.0)
    budget: int | None = Field(default=None, ge=1)


class CliqueRequest(GraphSource):
    limit: int | None = Field(default=None, ge=1)
