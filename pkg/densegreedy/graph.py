# densegreedy/graph.py
"""Random graphs G(n, p) stored as bit-packed adjacency rows.

Pair draw order (part of the reproducibility contract, do not change):
the generator is ``numpy.random.Generator(numpy.random.PCG64(seed))`` and pairs are
visited as u = 0..n-2, v = u+1..n-1. Each pair consumes one ``random()`` double
and is an edge iff that double is < p.

Row u of ``Graph.bits`` is a little-endian bitset: bit (v & 63) of word (v >> 6)
is set iff u and v are adjacent.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import IO, Iterable, Iterator

import numpy as np

from densegreedy.errors import ArgumentError, UndefinedDensityError

logger = logging.getLogger(__name__)

WORD_BITS = 64
SEED_LIMIT = 1 << 64
# rows generated per block; multiple of 8 so transposed blocks land on byte boundaries
_BLOCK_ROWS = 1024


def _word_count(n: int) -> int:
    return (n + WORD_BITS - 1) // WORD_BITS


def _check_count(name: str, value) -> int:
    if isinstance(value, bool) or int(value) != value:
        raise ArgumentError(f"{name} must be an integer, got {value!r}")
    return int(value)


def check_seed(seed) -> int:
    seed = _check_count("seed", seed)
    if not 0 <= seed < SEED_LIMIT:
        raise ArgumentError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


# ============================================================
# Vertex sets
# ============================================================
@dataclass(frozen=True)
class VertexSet:
    members: tuple[int, ...] = ()

    def __post_init__(self):
        members = tuple(int(v) for v in self.members)
        object.__setattr__(self, "members", members)
        if members and members[0] < 0:
            raise ArgumentError(f"negative vertex index {members[0]}")
        if any(a >= b for a, b in zip(members, members[1:])):
            raise ArgumentError("vertex set members must be strictly increasing")

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        vs = sorted(int(v) for v in vertices)
        if len(set(vs)) != len(vs):
            raise ArgumentError("duplicate vertex in set")
        return cls(tuple(vs))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v) -> bool:
        return v in self.members

    def intersection(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.of(set(self.members) & set(other.members))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.members, dtype=np.intp)


# ============================================================
# Graph
# ============================================================
class Graph:
    """Immutable simple graph; adjacency is a read-only (n, ceil(n/64)) uint64 array."""

    def __init__(self, n: int, bits: np.ndarray, seed: int = 0, p: float = float("nan")):
        bits = np.ascontiguousarray(bits, dtype=np.uint64)
        if bits.shape != (n, _word_count(n)):
            raise ArgumentError(f"adjacency shape {bits.shape} does not match n={n}")
        bits.flags.writeable = False
        self.n = n
        self.bits = bits
        self.seed = seed
        self.p = p

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count}, seed={self.seed}, p={self.p})"

    @cached_property
    def edge_count(self) -> int:
        return int(np.bitwise_count(self.bits).sum()) // 2

    @cached_property
    def neighbor_masks(self) -> list[int]:
        """Rows as Python ints, for the bitset searches in the oracle."""
        return [int.from_bytes(row.astype("<u8").tobytes(), "little") for row in self.bits]

    def row_mask(self, u: int) -> int:
        self.check_vertex(u)
        return int.from_bytes(self.bits[u].astype("<u8").tobytes(), "little")

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool((int(self.bits[u, v >> 6]) >> (v & 63)) & 1)

    def check_vertex(self, v) -> None:
        if isinstance(v, bool) or not 0 <= int(v) < self.n or int(v) != v:
            raise ArgumentError(f"vertex {v!r} out of range for n={self.n}")

    def check(self, s: VertexSet) -> VertexSet:
        if s.members and s.members[-1] >= self.n:
            raise ArgumentError(f"vertex {s.members[-1]} out of range for n={self.n}")
        return s

    def vertices(self) -> VertexSet:
        return VertexSet(tuple(range(self.n)))

    def set_mask_words(self, s: VertexSet) -> np.ndarray:
        """Membership bitset of s in the same word layout as the adjacency rows."""
        self.check(s)
        words = np.zeros(_word_count(self.n), dtype=np.uint64)
        idx = s.as_array()
        if idx.size:
            np.bitwise_or.at(words, idx >> 6, np.left_shift(np.uint64(1), (idx & 63).astype(np.uint64)))
        return words


def _empty_bits(n: int) -> np.ndarray:
    return np.zeros((n, _word_count(n)), dtype=np.uint64)


def generate_gnp(n: int, p: float, seed: int) -> Graph:
    n = _check_count("n", n)
    if n < 1:
        raise ArgumentError(f"n must be >= 1, got {n}")
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ArgumentError(f"p must lie in [0, 1], got {p}")
    seed = check_seed(seed)

    rng = np.random.Generator(np.random.PCG64(seed))
    row_bytes = (n + 7) // 8
    packed = np.zeros((n, _word_count(n) * 8), dtype=np.uint8)
    for a in range(0, n, _BLOCK_ROWS):
        b = min(a + _BLOCK_ROWS, n)
        block = np.zeros((b - a, n), dtype=bool)
        for u in range(a, min(b, n - 1)):
            block[u - a, u + 1:] = rng.random(n - 1 - u) < p
        packed[a:b, :row_bytes] |= np.packbits(block, axis=1, bitorder="little")
        # mirror the block into the lower triangle: rows v get bits for u in [a, b)
        cols = np.packbits(block.T, axis=1, bitorder="little")
        packed[:, a // 8: a // 8 + cols.shape[1]] |= cols

    g = Graph(n, packed.view("<u8").astype(np.uint64), seed=seed, p=p)
    logger.debug("generated G(%d, %s) seed=%d with %d edges", n, p, seed, g.edge_count)
    return g


def from_edges(n: int, edges: Iterable[tuple[int, int]], *, seed: int = 0, p: float = float("nan")) -> Graph:
    n = _check_count("n", n)
    if n < 1:
        raise ArgumentError(f"n must be >= 1, got {n}")
    pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
    bits = _empty_bits(n)
    if pairs.size:
        us, vs = pairs[:, 0], pairs[:, 1]
        if (us == vs).any():
            raise ArgumentError("self-loops are not allowed")
        if pairs.min() < 0 or pairs.max() >= n:
            raise ArgumentError(f"edge endpoint out of range for n={n}")
        for a, b in ((us, vs), (vs, us)):
            np.bitwise_or.at(bits, (a, b >> 6), np.left_shift(np.uint64(1), (b & 63).astype(np.uint64)))
    return Graph(n, bits, seed=seed, p=p)


def complete_graph(n: int) -> Graph:
    return from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)), p=1.0)


def edges(g: Graph) -> Iterator[tuple[int, int]]:
    """Edges (u, v) with u < v in lexicographic order."""
    for u in range(g.n - 1):
        row = np.unpackbits(g.bits[u].astype("<u8").view(np.uint8), bitorder="little")[u + 1: g.n]
        for v in np.flatnonzero(row):
            yield u, int(v) + u + 1


# ============================================================
# Queries
# ============================================================
def degrees_into(g: Graph, vertices: np.ndarray, s: VertexSet) -> np.ndarray:
    """|E({v}, S)| for every v in ``vertices`` (vectorised over rows)."""
    mask = g.set_mask_words(s)
    return np.bitwise_count(g.bits[vertices] & mask).sum(axis=1, dtype=np.int64)


def degree_into(g: Graph, v: int, s: VertexSet) -> int:
    g.check_vertex(v)
    mask = g.set_mask_words(s)
    return int(np.bitwise_count(g.bits[int(v)] & mask).sum())


def edge_count_between(g: Graph, s: VertexSet, t: VertexSet) -> int:
    """|E(S, T)|; a pair with both endpoints in S ∩ T is counted once."""
    g.check(s)
    g.check(t)
    ordered = int(degrees_into(g, s.as_array(), t).sum())
    both = s.intersection(t)
    inner = int(degrees_into(g, both.as_array(), both).sum()) // 2
    return ordered - inner


@dataclass(frozen=True)
class Density:
    edges: int
    pairs: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.edges, self.pairs)

    @property
    def value(self) -> float:
        return self.edges / self.pairs

    def __float__(self) -> float:
        return self.value


def density(g: Graph, s: VertexSet) -> Density:
    if len(s) < 2:
        raise UndefinedDensityError(f"density needs at least 2 vertices, got {len(s)}")
    return Density(edge_count_between(g, s, s), math.comb(len(s), 2))


def is_clique(g: Graph, s: VertexSet) -> bool:
    return edge_count_between(g, s, s) == math.comb(len(s), 2)


# ============================================================
# Edge-list text format: "n m", then m lines "u v" (u < v, sorted)
# ============================================================
def write_edge_list(g: Graph, dest: str | Path | IO[str]) -> None:
    lines = [f"{g.n} {g.edge_count}\n"]
    lines.extend(f"{u} {v}\n" for u, v in edges(g))
    if isinstance(dest, (str, Path)):
        with open(dest, "w", encoding="ascii", newline="\n") as fh:
            fh.writelines(lines)
    else:
        dest.writelines(lines)


def read_edge_list(src: str | Path | IO[str]) -> Graph:
    if isinstance(src, (str, Path)):
        with open(src, "r", encoding="ascii") as fh:
            text = fh.read()
    else:
        text = src.read()
    rows = text.split("\n")
    if rows and rows[-1] == "":
        rows.pop()
    if not rows:
        raise ArgumentError("edge list is empty")
    try:
        n, m = (int(x) for x in rows[0].split())
        pairs = [tuple(int(x) for x in row.split()) for row in rows[1:]]
    except ValueError:
        raise ArgumentError("edge list must contain integer pairs")
    if len(pairs) != m or any(len(pr) != 2 for pr in pairs):
        raise ArgumentError(f"edge list header declares {m} edges, found {len(pairs)} lines")
    if any(u >= v for u, v in pairs):
        raise ArgumentError("edge list pairs must satisfy u < v")
    if any(a >= b for a, b in zip(pairs, pairs[1:])):
        raise ArgumentError("edge list must be sorted lexicographically without duplicates")
    return from_edges(n, pairs)
