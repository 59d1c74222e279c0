# densegreedy/routes_experiments.py
from fastapi import APIRouter, Depends

from densegreedy.deps import Settings, get_settings
from densegreedy.experiments import run_experiment
from densegreedy.models import ExperimentConfig

router = APIRouter(prefix="/experiments", tags=["experiments"])


@router.post("")
def experiments(payload: ExperimentConfig, settings: Settings = Depends(get_settings)):
    """Runs synchronously and returns {config, records, summary}."""
    return run_experiment(payload, workers=settings.workers).model_dump(mode="json")
