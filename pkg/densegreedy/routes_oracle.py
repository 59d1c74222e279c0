# densegreedy/routes_oracle.py
from fastapi import APIRouter, Depends

from densegreedy.analysis import dense_edge_threshold
from densegreedy.deps import Settings, get_settings
from densegreedy.models import CliqueRequest, CountRequest, DensestRequest
from densegreedy.oracle import count_dense_subgraphs, max_clique_exact, max_density_subgraph_exact
from densegreedy.routes_graphs import graph_from_source

router = APIRouter(prefix="/oracle", tags=["oracle"])


@router.post("/densest")
def densest(payload: DensestRequest, settings: Settings = Depends(get_settings)):
    g = graph_from_source(payload)
    budget = payload.budget or settings.oracle_node_budget
    return max_density_subgraph_exact(g, payload.k, budget=budget, prune=payload.prune).to_dict()


@router.post("/count")
def count(payload: CountRequest, settings: Settings = Depends(get_settings)):
    g = graph_from_source(payload)
    budget = payload.budget or settings.count_subset_budget
    return {
        "k": payload.k,
        "delta": payload.delta,
        "threshold_edges": dense_edge_threshold(payload.k, payload.delta),
        "count": count_dense_subgraphs(g, payload.k, payload.delta, budget=budget),
    }


@router.post("/clique")
def clique(payload: CliqueRequest, settings: Settings = Depends(get_settings)):
    g = graph_from_source(payload)
    found = max_clique_exact(g, limit=payload.limit or settings.clique_vertex_limit)
    return {"size": len(found), "clique": list(found)}
