# densegreedy/greedy.py
"""Partitioned greedy dense-subgraph search and the index-order greedy clique baseline."""
from __future__ import annotations

import csv
import io
import json
import logging
import math
from dataclasses import dataclass, field

import numpy as np

from densegreedy.errors import ArgumentError, InvalidPartitionError
from densegreedy.graph import Graph, VertexSet, check_seed, edge_count_between

logger = logging.getLogger(__name__)


def default_k(n: int) -> int:
    """round(2 log2 n), clipped to [1, n]."""
    if n < 2:
        return 1
    return max(1, min(n, round(2 * math.log2(n))))


# ============================================================
# Partition
# ============================================================
@dataclass(frozen=True)
class Partition:
    n: int
    cells: tuple[VertexSet, ...]
    leftover: VertexSet = field(default_factory=VertexSet)
    seed: int | None = None

    @property
    def k(self) -> int:
        return len(self.cells)

    def validate(self, g: Graph | None = None) -> None:
        if g is not None and g.n != self.n:
            raise InvalidPartitionError(f"partition covers n={self.n}, graph has n={g.n}")
        if not self.cells:
            raise InvalidPartitionError("partition has no cells")
        seen: set[int] = set()
        for idx, cell in enumerate((*self.cells, self.leftover), start=1):
            if idx <= self.k and len(cell) == 0:
                raise InvalidPartitionError(f"cell {idx} is empty")
            if seen.intersection(cell.members):
                raise InvalidPartitionError(f"cell {idx} overlaps an earlier cell")
            seen.update(cell.members)
        if seen != set(range(self.n)):
            raise InvalidPartitionError("cells and leftover do not cover the vertex set")


def partition_vertices(n: int, k: int, seed: int | None) -> Partition:
    """Shuffle 0..n-1 with the seeded PCG64 stream (identity order when seed is None)
    and deal them into k cells of size n // k; the n mod k tail is left over."""
    if isinstance(k, bool) or int(k) != k or isinstance(n, bool) or int(n) != n:
        raise ArgumentError("n and k must be integers")
    if not 1 <= k <= n:
        raise ArgumentError(f"need 1 <= k <= n, got k={k}, n={n}")
    if seed is None:
        order = np.arange(n)
    else:
        order = np.random.Generator(np.random.PCG64(check_seed(seed))).permutation(n)
    size = n // k
    cells = tuple(VertexSet.of(order[i * size:(i + 1) * size]) for i in range(k))
    return Partition(n=n, cells=cells, leftover=VertexSet.of(order[k * size:]), seed=seed)


# ============================================================
# Greedy trace
# ============================================================
@dataclass(frozen=True)
class GreedyStep:
    i: int
    vertex: int
    gained: int
    cell: int


@dataclass(frozen=True)
class GreedyTrace:
    steps: tuple[GreedyStep, ...]
    final_set: VertexSet
    final_edges: int
    final_density: float

    @property
    def gained(self) -> list[int]:
        return [s.gained for s in self.steps]

    def rows(self) -> list[dict]:
        return [{"i": s.i, "vertex": s.vertex, "gained": s.gained} for s in self.steps]

    def to_json(self) -> str:
        return json.dumps(self.rows())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["step", "vertex", "gained"])
        w.writerows((s.i, s.vertex, s.gained) for s in self.steps)
        return buf.getvalue()

    def to_dict(self) -> dict:
        return {
            "steps": self.rows(),
            "final_set": list(self.final_set),
            "final_edges": self.final_edges,
            "final_density": self.final_density,
        }


def greedy_dense(g: Graph, partition: Partition) -> GreedyTrace:
    """Step i takes the vertex of cell i+1 with most edges into S_i (lowest index on ties)
    and returns the size-k set holding one vertex per cell."""
    partition.validate(g)
    chosen = np.zeros(g.bits.shape[1], dtype=np.uint64)
    steps = []
    for i, cell in enumerate(partition.cells):
        idx = cell.as_array()
        gains = np.bitwise_count(g.bits[idx] & chosen).sum(axis=1, dtype=np.int64)
        best = int(np.argmax(gains))  # first maximum; cells are sorted ascending
        v, gained = int(idx[best]), int(gains[best])
        steps.append(GreedyStep(i=i, vertex=v, gained=gained, cell=i + 1))
        chosen[v >> 6] |= np.uint64(1) << np.uint64(v & 63)
        logger.debug("step %d: cell %d -> vertex %d (+%d edges)", i, i + 1, v, gained)

    k = partition.k
    final_edges = sum(s.gained for s in steps)
    # a single vertex is vacuously a clique
    final_density = final_edges / math.comb(k, 2) if k >= 2 else 1.0
    return GreedyTrace(
        steps=tuple(steps),
        final_set=VertexSet.of(s.vertex for s in steps),
        final_edges=final_edges,
        final_density=final_density,
    )


def random_cell_selection(g: Graph, partition: Partition, seed: int) -> tuple[VertexSet, int]:
    """One uniformly random vertex per cell; the no-argmax baseline."""
    partition.validate(g)
    rng = np.random.Generator(np.random.PCG64(check_seed(seed)))
    picked = VertexSet.of(int(cell.members[rng.integers(len(cell))]) for cell in partition.cells)
    return picked, edge_count_between(g, picked, picked)


def plain_greedy_clique(g: Graph) -> VertexSet:
    """Scan vertices in index order, keeping each one adjacent to everything kept so far."""
    candidates = (1 << g.n) - 1
    clique = []
    while candidates:
        # lowest surviving candidate is the next vertex the index scan would accept
        v = (candidates & -candidates).bit_length() - 1
        clique.append(v)
        candidates &= g.row_mask(v)
    return VertexSet(tuple(clique))
