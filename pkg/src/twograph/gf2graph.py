"""GF(2) graph arithmetic on bit-packed adjacency rows.

A graph on n <= 64 vertices is stored as one integer bitmask per vertex:
bit j of row i is the i-j edge, and bit i of row i is a loop at i.  Vertex
sets (neighbourhoods, balls, R, Q, ...) are plain int bitmasks.  All the
constructions the rewrite calculus needs -- diagonal graphs, complete
graphs, the symmetrised bipartite overlay, local complementation and edge
local complementation with loop tracking -- reduce to row-wise XOR/AND.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_N = 64


class GraphError(ValueError):
    """Malformed graph or out-of-range vertex argument."""


def bits(mask: int) -> Iterator[int]:
    """Iterate over the set bit positions of a mask, ascending."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> list[int]:
    return list(bits(mask))


@dataclass(frozen=True)
class Gf2Graph:
    """Undirected graph over GF(2) with loops, as a tuple of row bitmasks."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_N:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_N}]")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {i} has bits outside the vertex range")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise GraphError(f"adjacency not symmetric at ({i},{j})")

    # -- constructors ------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Gf2Graph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Gf2Graph":
        """Build from (i, j) pairs; i == j encodes a loop."""
        rows = [0] * n
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge ({i},{j}) out of range for n={n}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "Gf2Graph":
        rows = tuple(rows)
        return cls(len(rows), rows)

    # -- queries -----------------------------------------------------------

    def edges(self) -> list[tuple[int, int]]:
        """Sorted (i, j) pairs with i <= j; loops appear as (i, i)."""
        out = []
        for i in range(self.n):
            for j in range(i, self.n):
                if self.rows[i] >> j & 1:
                    out.append((i, j))
        return out

    def has_edge(self, i: int, j: int) -> bool:
        self._check_vertex(i)
        self._check_vertex(j)
        return bool(self.rows[i] >> j & 1)

    def loops(self) -> int:
        return mask_of(v for v in range(self.n) if self.rows[v] >> v & 1)

    def is_simple(self) -> bool:
        return self.loops() == 0

    def strip_loops(self) -> "Gf2Graph":
        return Gf2Graph(self.n, tuple(row & ~(1 << v) for v, row in enumerate(self.rows)))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")


# -- GF(2) arithmetic and the primitive constructors ----------------------


def graph_add(a: Gf2Graph, b: Gf2Graph) -> Gf2Graph:
    """Entrywise XOR of adjacency matrices (GF(2) sum = difference)."""
    if a.n != b.n:
        raise GraphError(f"size mismatch: {a.n} != {b.n}")
    return Gf2Graph(a.n, tuple(x ^ y for x, y in zip(a.rows, b.rows)))


def open_neighborhood(g: Gf2Graph, v: int) -> int:
    """N_v: neighbours of v other than v itself (a loop does not count)."""
    g._check_vertex(v)
    return g.rows[v] & ~(1 << v)


def closed_ball(g: Gf2Graph, v: int) -> int:
    """B_v = N_v plus v, whether or not v has a loop."""
    g._check_vertex(v)
    return g.rows[v] | (1 << v)


def delta(n: int, s: int) -> Gf2Graph:
    """Diagonal graph: loops exactly on the vertices of s."""
    _check_set(n, s)
    return Gf2Graph(n, tuple((1 << v) if s >> v & 1 else 0 for v in range(n)))


def complete_graph(n: int, s: int) -> Gf2Graph:
    """All edges between distinct vertices of s; no loops."""
    _check_set(n, s)
    return Gf2Graph(n, tuple((s & ~(1 << v)) if s >> v & 1 else 0 for v in range(n)))


def bipartite_k(n: int, a: int, b: int) -> Gf2Graph:
    """Bipartite-style overlay between vertex sets a and b.

    Edge rule (mod-2 symmetrised so overlapping sets behave): for i != j
    the edge ij is present iff exactly one of (i in a, j in b) and
    (j in a, i in b) holds; the diagonal carries a loop at every
    i in a & b.  For disjoint a, b this is the complete bipartite graph;
    pairs inside a & b cancel.
    """
    _check_set(n, a)
    _check_set(n, b)
    rows = [0] * n
    _add_bipartite_rows(rows, a, b)
    return Gf2Graph(n, tuple(rows))


def lc(g: Gf2Graph, v: int) -> Gf2Graph:
    """Classical local complementation at v (simple graphs only)."""
    if not g.is_simple():
        raise GraphError("lc requires a simple (loop-free) graph")
    g._check_vertex(v)
    nv = g.rows[v]
    rows = list(g.rows)
    for u in bits(nv):
        rows[u] ^= nv & ~(1 << u)
    return Gf2Graph(g.n, tuple(rows))


def elc_loop(g: Gf2Graph, v: int, w: int) -> Gf2Graph:
    """Edge local complementation at edge vw, with loop tracking.

    G + K_{B_v,B_w} + loops at {v,w} + (loop at v ? loops on B_w)
    + (loop at w ? loops on B_v).  Requires the edge vw to be present.
    """
    g._check_vertex(v)
    g._check_vertex(w)
    if v == w:
        raise GraphError("elc_loop needs two distinct vertices")
    if not g.has_edge(v, w):
        raise GraphError(f"elc_loop: ({v},{w}) is not an edge")
    rows = list(g.rows)
    _elc_loop_rows(rows, v, w)
    return Gf2Graph(g.n, tuple(rows))


def _check_set(n: int, s: int) -> None:
    if s < 0 or s & ~((1 << n) - 1):
        raise GraphError(f"vertex set {bin(s)} out of range for n={n}")


# -- mutable row kernels ---------------------------------------------------
# Shared by the immutable wrappers above and by the state rewrite engine,
# which runs them millions of times inside the spectral sweep.


def _add_bipartite_rows(rows: list[int], a: int, b: int) -> None:
    ab = a & b
    for i in bits(a | b):
        bi = 1 << i
        t = (b if a & bi else 0) ^ (a if b & bi else 0)
        if ab & bi:
            t |= bi
        rows[i] ^= t


def _elc_loop_rows(rows: list[int], v: int, w: int) -> None:
    bv = rows[v] | (1 << v)
    bw = rows[w] | (1 << w)
    lv = rows[v] >> v & 1
    lw = rows[w] >> w & 1
    _add_bipartite_rows(rows, bv, bw)
    rows[v] ^= 1 << v
    rows[w] ^= 1 << w
    if lv:
        for u in bits(bw):
            rows[u] ^= 1 << u
    if lw:
        for u in bits(bv):
            rows[u] ^= 1 << u


def _lc_loop_rows(rows: list[int], q: int, v: int) -> int:
    """Local complementation at v with loop and q tracking; returns new q."""
    nv = rows[v] & ~(1 << v)
    for u in bits(nv):
        rows[u] ^= nv & ~(1 << u)
    if rows[v] >> v & 1:
        for u in bits(nv):
            rows[u] ^= 1 << u
    for u in bits(q & nv):
        rows[u] ^= 1 << u
    return q ^ (nv | (1 << v))
