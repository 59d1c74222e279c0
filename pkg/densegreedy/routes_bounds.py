# densegreedy/routes_bounds.py
from fastapi import APIRouter, Depends, Query

from densegreedy.analysis import DEFAULT_DELTA, bound_report
from densegreedy.deps import Settings, get_settings
from densegreedy.greedy import default_k

router = APIRouter(tags=["bounds"])


@router.get("/bounds")
def bounds(
    n: int = Query(..., ge=2),
    k: int | None = Query(None, ge=1),
    delta: float = Query(DEFAULT_DELTA, ge=0.0),
    tol: float | None = Query(None, gt=0.0),
    settings: Settings = Depends(get_settings),
):
    """Analytical predictions for G(n, 1/2); k defaults to round(2 log2 n)."""
    k = k if k is not None else default_k(n)
    return bound_report(n, k, delta, tol if tol is not None else settings.quad_tol).to_dict()
