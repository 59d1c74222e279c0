# densegreedy/deps.py
import logging
import os
import sys
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = "".join((os.getenv(name) or "").split())
    if not raw:
        return default
    try:
        return int(raw.replace("_", ""))
    except ValueError:
        raise RuntimeError(f"{name} must be an integer, got {raw!r}")


def _env_float(name: str, default: float) -> float:
    raw = "".join((os.getenv(name) or "").split())
    if not raw:
        return default
    try:
        return float(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be a number, got {raw!r}")


ORACLE_NODE_BUDGET = _env_int("DENSEGREEDY_ORACLE_NODE_BUDGET", 1_000_000_000)
COUNT_SUBSET_BUDGET = _env_int("DENSEGREEDY_COUNT_SUBSET_BUDGET", 100_000_000)
CLIQUE_VERTEX_LIMIT = _env_int("DENSEGREEDY_CLIQUE_VERTEX_LIMIT", 256)
WORKERS = _env_int("DENSEGREEDY_WORKERS", 1)
QUAD_TOL = _env_float("DENSEGREEDY_QUAD_TOL", 1e-8)
LOG_LEVEL = (os.getenv("DENSEGREEDY_LOG_LEVEL") or "INFO").strip().upper()

# local frontends by default
CORS_ORIGINS = [
    o.strip()
    for o in (os.getenv("DENSEGREEDY_CORS_ORIGINS") or "http://localhost:3000,http://127.0.0.1:3000").split(",")
    if o.strip()
]

LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"


@dataclass(frozen=True)
class Settings:
    oracle_node_budget: int = ORACLE_NODE_BUDGET
    count_subset_budget: int = COUNT_SUBSET_BUDGET
    clique_vertex_limit: int = CLIQUE_VERTEX_LIMIT
    workers: int = WORKERS
    quad_tol: float = QUAD_TOL


def get_settings() -> Settings:
    return Settings()


def configure_logging(level: str | None = None) -> None:
    logging.basicConfig(level=(level or LOG_LEVEL), format=LOG_FORMAT, stream=sys.stderr)
