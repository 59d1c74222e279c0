# densegreedy/oracle.py
"""Exhaustive ground truth at desk scale.

Every search enumerates size-k subsets in lexicographic order over Python-int
bitsets. Budgets are hard limits: exceeding one raises ResourceError.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterable

from densegreedy import deps
from densegreedy.analysis import dense_edge_threshold
from densegreedy.errors import ArgumentError, ResourceError
from densegreedy.graph import Graph, VertexSet
from densegreedy.greedy import plain_greedy_clique

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleResult:
    k: int
    best_set: VertexSet
    best_edges: int
    best_density: float
    subsets_examined: int
    pruned: int
    nodes: int

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "best_set": list(self.best_set),
            "best_edges": self.best_edges,
            "best_density": self.best_density,
            "subsets_examined": self.subsets_examined,
            "pruned": self.pruned,
            "nodes": self.nodes,
        }


def _check_k(g: Graph, k, lo: int = 2) -> int:
    if isinstance(k, bool) or int(k) != k or not lo <= k <= g.n:
        raise ArgumentError(f"need {lo} <= k <= n={g.n}, got k={k!r}")
    return int(k)


def _first_vertices(g: Graph, k: int, first_vertex: int | None) -> range:
    if first_vertex is None:
        return range(g.n - k + 1)
    g.check_vertex(first_vertex)
    return range(first_vertex, first_vertex + 1) if first_vertex <= g.n - k else range(0)


def _completion_bound(depth: int, r: int) -> int:
    # edges gained if all r remaining picks joined everything
    return r * depth + r * (r - 1) // 2


# ============================================================
# Densest k-subgraph
# ============================================================
def max_density_subgraph_exact(
    g: Graph,
    k: int,
    *,
    budget: int | None = None,
    prune: bool = True,
    first_vertex: int | None = None,
) -> OracleResult:
    """Maximum induced edge count over all size-k subsets; the first maximiser in
    lexicographic order is reported. ``first_vertex`` restricts the search to subsets
    whose smallest member is that vertex."""
    k = _check_k(g, k)
    budget = deps.ORACLE_NODE_BUDGET if budget is None else int(budget)
    adj = g.neighbor_masks
    n = g.n
    chosen: list[int] = []
    state = {"best_edges": -1, "best": (), "nodes": 0, "leaves": 0, "pruned": 0}

    def extend(start: int, mask: int, edges: int) -> None:
        depth = len(chosen)
        r = k - depth
        if r == 0:
            state["leaves"] += 1
            if edges > state["best_edges"]:
                state["best_edges"], state["best"] = edges, tuple(chosen)
            return
        # ties cannot displace the earlier maximiser, so equality prunes too
        if prune and edges + _completion_bound(depth, r) <= state["best_edges"]:
            state["pruned"] += 1
            return
        candidates = _first_vertices(g, k, first_vertex) if depth == 0 else range(start, n - r + 1)
        for v in candidates:
            state["nodes"] += 1
            if state["nodes"] > budget:
                raise ResourceError(f"densest-{k} search exceeded the node budget of {budget}")
            chosen.append(v)
            extend(v + 1, mask | (1 << v), edges + (adj[v] & mask).bit_count())
            chosen.pop()

    extend(0, 0, 0)
    logger.debug("densest-%d: nodes=%d leaves=%d pruned=%d", k, state["nodes"], state["leaves"], state["pruned"])
    best_edges = max(state["best_edges"], 0)
    return OracleResult(
        k=k,
        best_set=VertexSet(state["best"]),
        best_edges=best_edges,
        best_density=best_edges / math.comb(k, 2),
        subsets_examined=state["leaves"],
        pruned=state["pruned"],
        nodes=state["nodes"],
    )


def merge_densest(results: Iterable[OracleResult]) -> OracleResult:
    """Reduce searches over disjoint first-vertex prefixes to the whole-range answer."""
    results = [r for r in results]
    if not results:
        raise ArgumentError("nothing to merge")
    found = [r for r in results if len(r.best_set)]
    best = min(found, key=lambda r: (-r.best_edges, r.best_set.members)) if found else results[0]
    return OracleResult(
        k=best.k,
        best_set=best.best_set,
        best_edges=best.best_edges,
        best_density=best.best_density,
        subsets_examined=sum(r.subsets_examined for r in results),
        pruned=sum(r.pruned for r in results),
        nodes=sum(r.nodes for r in results),
    )


# ============================================================
# Dense-subgraph counting and witnesses
# ============================================================
def _check_budget(g: Graph, k: int, budget: int | None) -> None:
    budget = deps.COUNT_SUBSET_BUDGET if budget is None else int(budget)
    total = math.comb(g.n, k)
    if total > budget:
        raise ResourceError(f"C({g.n}, {k}) = {total} subsets exceeds the budget of {budget}")


def count_dense_subgraphs(
    g: Graph,
    k: int,
    delta: float,
    *,
    budget: int | None = None,
    first_vertex: int | None = None,
) -> int:
    """Exact number of size-k subsets with at least ceil((1-delta) C(k,2)) induced edges."""
    k = _check_k(g, k)
    _check_budget(g, k, budget)
    target = dense_edge_threshold(k, delta)
    adj = g.neighbor_masks
    n = g.n

    def extend(start: int, mask: int, edges: int, depth: int) -> int:
        r = k - depth
        if depth and edges >= target:
            # induced edges only grow, every completion qualifies; depth 0 defers to the prefix loop
            return math.comb(n - start, r)
        if r == 0 or edges + _completion_bound(depth, r) < target:
            return 0
        candidates = _first_vertices(g, k, first_vertex) if depth == 0 else range(start, n - r + 1)
        return sum(extend(v + 1, mask | (1 << v), edges + (adj[v] & mask).bit_count(), depth + 1) for v in candidates)

    return extend(0, 0, 0, 0)


def merge_counts(counts: Iterable[int]) -> int:
    """Counts over disjoint first-vertex prefixes add up to the whole-range count."""
    return sum(int(c) for c in counts)


def find_dense_subgraph(g: Graph, k: int, delta: float, *, budget: int | None = None) -> VertexSet | None:
    """First size-k subset (lexicographic) of density >= 1 - delta, or None."""
    k = _check_k(g, k)
    _check_budget(g, k, budget)
    target = dense_edge_threshold(k, delta)
    adj = g.neighbor_masks
    n = g.n
    chosen: list[int] = []

    def extend(start: int, mask: int, edges: int) -> bool:
        depth = len(chosen)
        r = k - depth
        if r == 0:
            return edges >= target
        if edges + _completion_bound(depth, r) < target:
            return False
        for v in range(start, n - r + 1):
            chosen.append(v)
            if extend(v + 1, mask | (1 << v), edges + (adj[v] & mask).bit_count()):
                return True
            chosen.pop()
        return False

    return VertexSet(tuple(chosen)) if extend(0, 0, 0) else None


# ============================================================
# Maximum clique: branch and bound with greedy colouring bounds
# ============================================================
def _colour_classes(adj: list[int], candidates: int) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of ``candidates``; returns vertices in colour order
    with the colour number of each (an upper bound on cliques among the prefix)."""
    order: list[int] = []
    colours: list[int] = []
    uncoloured = candidates
    colour = 0
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~(adj[v] | (1 << v))
            uncoloured &= ~(1 << v)
            order.append(v)
            colours.append(colour)
    return order, colours


def max_clique_exact(g: Graph, *, limit: int | None = None) -> VertexSet:
    limit = deps.CLIQUE_VERTEX_LIMIT if limit is None else int(limit)
    if g.n > limit:
        raise ResourceError(f"exact maximum clique is limited to n <= {limit}, got n={g.n}")
    adj = g.neighbor_masks
    best = list(plain_greedy_clique(g))
    current: list[int] = []

    def expand(candidates: int) -> None:
        nonlocal best
        order, colours = _colour_classes(adj, candidates)
        for idx in range(len(order) - 1, -1, -1):
            if len(current) + colours[idx] <= len(best):
                return
            v = order[idx]
            current.append(v)
            narrowed = candidates & adj[v]
            if narrowed:
                expand(narrowed)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            candidates &= ~(1 << v)

    expand((1 << g.n) - 1)
    return VertexSet.of(best)
