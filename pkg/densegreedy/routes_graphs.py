# densegreedy/routes_graphs.py
from fastapi import APIRouter

from densegreedy.experiments import partition_seed
from densegreedy.graph import Graph, edges, from_edges, generate_gnp
from densegreedy.greedy import default_k, greedy_dense, partition_vertices
from densegreedy.models import GenerateRequest, GraphSource, GreedyRequest

router = APIRouter(tags=["graphs"])


def graph_from_source(src: GraphSource) -> Graph:
    """Explicit edges win over a (n, p, seed) draw."""
    if src.edges is not None:
        return from_edges(src.n, src.edges)
    return generate_gnp(src.n, src.p, src.seed)


@router.post("/graphs/generate")
def generate(payload: GenerateRequest):
    g = graph_from_source(payload)
    out = {"n": g.n, "m": g.edge_count, "seed": payload.seed, "p": payload.p}
    if payload.include_edges:
        out["edges"] = [list(e) for e in edges(g)]
    return out


@router.post("/greedy")
def greedy(payload: GreedyRequest):
    g = graph_from_source(payload)
    k = payload.k if payload.k is not None else default_k(g.n)
    seed = payload.partition_seed if payload.partition_seed is not None else partition_seed(payload.seed)
    trace = greedy_dense(g, partition_vertices(g.n, k, seed))
    return trace.to_dict()
