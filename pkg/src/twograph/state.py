"""Generalised two-graph states and their rewrite calculus.

A stabilizer state is stored as a triple (G, R, Q): a GF(2) graph G with
loops, the systematic set R (bitmask), and a subset Q of R (bitmask).  With
L = V \\ R, the amplitude function factors as m(x) * i^p(x), where

    m(x) = prod_{v in L} (G_vv + 1 + x_v + sum_{j in R} G_vj x_j)   (mod 2)
    p(x) = sum_{i<j in R} 2 G_ij x_i x_j
           + sum_{j in R} (2 G_jj + Q_j) x_j                        (mod 4)

up to a global scalar which is never tracked.  The rewrite rules (swp, H,
N, N^-1, lambda, lambda^2, canonisation) are closed over this triple; each
returns a fresh immutable state.  The hot inner kernels operate on a
mutable row list and are shared with the spectral sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .gf2graph import (
    Gf2Graph,
    GraphError,
    _elc_loop_rows,
    _lc_loop_rows,
    bits,
    mask_of,
    vertices_of,
)


class PreconditionError(ValueError):
    """An operation was called on arguments violating its precondition."""


class StateInvariantError(ValueError):
    """A (G, R, Q) triple violates the representation invariants."""


@dataclass(frozen=True)
class GeneralisedTwoGraphState:
    g: Gf2Graph
    r: int
    q: int

    def __post_init__(self) -> None:
        n = self.g.n
        if n == 0:
            raise StateInvariantError("degenerate zero-qubit state not supported")
        full = (1 << n) - 1
        if self.r & ~full or self.r < 0:
            raise StateInvariantError("r outside the vertex range")
        if self.q & ~self.r:
            raise StateInvariantError("q must be a subset of r")
        lmask = ~self.r & full
        for v in bits(lmask):
            if self.g.rows[v] & lmask & ~(1 << v):
                raise StateInvariantError(
                    f"edge between two L-vertices at {v} (only loops allowed in L)"
                )

    # -- derived views -----------------------------------------------------

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def l(self) -> int:
        """The information set L = V \\ R, as a bitmask."""
        return ~self.r & ((1 << self.n) - 1)

    def m_graph(self) -> Gf2Graph:
        """Magnitude graph M: L-R edges plus loops on L."""
        lmask = self.l
        rows = []
        for v in range(self.n):
            if lmask >> v & 1:
                rows.append(self.g.rows[v])
            else:
                rows.append(self.g.rows[v] & lmask)
        return Gf2Graph(self.n, tuple(rows))

    def p_graph(self) -> Gf2Graph:
        """Phase graph P: the induced subgraph on R, loops included."""
        return Gf2Graph(
            self.n,
            tuple(
                (self.g.rows[v] & self.r) if self.r >> v & 1 else 0
                for v in range(self.n)
            ),
        )

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise PreconditionError(f"vertex {v} out of range for n={self.n}")


def from_graph_state(p_graph: Gf2Graph) -> GeneralisedTwoGraphState:
    """Embed a simple graph as the flat state with R = V, Q = empty."""
    if not p_graph.is_simple():
        raise PreconditionError("graph states come from simple graphs")
    return GeneralisedTwoGraphState(p_graph, (1 << p_graph.n) - 1, 0)


# -- rewrite kernels on mutable rows --------------------------------------
# Each takes (rows, r, q, ...) and returns the new (r, q); rows is edited
# in place.  They mirror the three-case rules exactly; the immutable
# wrappers below are the public API.


def _swp_rows(rows: list[int], r: int, q: int, v: int, w: int) -> tuple[int, int]:
    r2 = (r | 1 << v) & ~(1 << w)
    _elc_loop_rows(rows, v, w)
    if q >> w & 1:
        q = _lc_loop_rows(rows, q, w)
    return r2, q


def _apply_h_rows(rows: list[int], r: int, q: int, v: int) -> tuple[int, int]:
    bv_ = 1 << v
    if not r & bv_:  # case (i): v in L
        return r | bv_, q
    nv = rows[v] & ~bv_
    bv = nv | bv_
    if not bv & ~r:  # case (ii): whole ball inside R
        if not q & bv_:
            return r & ~bv_, q
        q2 = _lc_loop_rows(rows, q, v)
        for u in bits(bv):
            rows[u] ^= 1 << u
        return r, q2 | bv_
    # case (iii): swap in the smallest L-neighbour, then re-add v
    w = nv & ~r
    w = (w & -w).bit_length() - 1
    r2, q2 = _swp_rows(rows, r, q, w, v)
    return r2 | bv_, q2


def _apply_n_rows(rows: list[int], r: int, q: int, v: int) -> tuple[int, int]:
    bv_ = 1 << v
    if not r & bv_:  # case (i)
        q2 = _lc_loop_rows(rows, q, v)
        return r | bv_, q2 & ~bv_
    nv = rows[v] & ~bv_
    bv = nv | bv_
    if not bv & ~r:  # case (ii)
        if q & bv_:
            rows[v] ^= bv_
            return r & ~bv_, q & ~bv_
        q2 = _lc_loop_rows(rows, q, v)
        for u in bits(bv):
            rows[u] ^= 1 << u
        return r, q2
    # case (iii)
    w = nv & ~r
    w = (w & -w).bit_length() - 1
    r2, q2 = _swp_rows(rows, r, q, w, v)
    r2 |= bv_
    q3 = _lc_loop_rows(rows, q2, v)
    return r2, q3 & ~bv_


def _apply_n_inv_rows(rows: list[int], r: int, q: int, v: int) -> tuple[int, int]:
    bv_ = 1 << v
    r2, q2 = _apply_h_rows(rows, r, q, v)
    if not r2 & bv_:  # v landed in L: undo the local complement part
        nv = rows[v] & ~bv_
        for u in bits(nv):
            rows[u] ^= nv & ~(1 << u)
        if not rows[v] >> v & 1:
            for u in bits(nv):
                rows[u] ^= 1 << u
        for u in bits(q2 & nv):
            rows[u] ^= 1 << u
        return r2, q2 ^ nv
    if not q2 & bv_:
        rows[v] ^= bv_
        return r2, q2 | bv_
    return r2, q2 & ~bv_


# -- public immutable operations ------------------------------------------


def _wrap(s: GeneralisedTwoGraphState, rows: list[int], r: int, q: int):
    return GeneralisedTwoGraphState(Gf2Graph(s.n, tuple(rows)), r, q)


def lc_loop(g: Gf2Graph, q: int, v: int) -> tuple[Gf2Graph, int]:
    """Local complementation at v with loop/q tracking: (G, q) -> (G^v, q^v)."""
    g._check_vertex(v)
    rows = list(g.rows)
    q2 = _lc_loop_rows(rows, q, v)
    return Gf2Graph(g.n, tuple(rows)), q2


def swp(s: GeneralisedTwoGraphState, v: int, w: int) -> GeneralisedTwoGraphState:
    """Exchange the roles of v in L and its neighbour w in R."""
    s._check_vertex(v)
    s._check_vertex(w)
    if s.r >> v & 1:
        raise PreconditionError(f"swp: vertex {v} is not in L")
    if not s.g.has_edge(v, w) or v == w:
        raise PreconditionError(f"swp: {w} is not a neighbour of {v}")
    rows = list(s.g.rows)
    r2, q2 = _swp_rows(rows, s.r, s.q, v, w)
    return _wrap(s, rows, r2, q2)


def apply_h(s: GeneralisedTwoGraphState, v: int) -> GeneralisedTwoGraphState:
    s._check_vertex(v)
    rows = list(s.g.rows)
    r2, q2 = _apply_h_rows(rows, s.r, s.q, v)
    return _wrap(s, rows, r2, q2)


def apply_n(s: GeneralisedTwoGraphState, v: int) -> GeneralisedTwoGraphState:
    s._check_vertex(v)
    rows = list(s.g.rows)
    r2, q2 = _apply_n_rows(rows, s.r, s.q, v)
    return _wrap(s, rows, r2, q2)


def apply_n_inv(s: GeneralisedTwoGraphState, v: int) -> GeneralisedTwoGraphState:
    s._check_vertex(v)
    rows = list(s.g.rows)
    r2, q2 = _apply_n_inv_rows(rows, s.r, s.q, v)
    return _wrap(s, rows, r2, q2)


def apply_lambda(s: GeneralisedTwoGraphState, v: int) -> GeneralisedTwoGraphState:
    """lambda_v acts on the triple exactly as N_v (they differ by a global factor)."""
    return apply_n(s, v)


def apply_lambda_sq(s: GeneralisedTwoGraphState, v: int) -> GeneralisedTwoGraphState:
    """lambda_v^2 = N_v twice = N_v^-1 on the triple."""
    return apply_n_inv(s, v)


def to_graph_state(
    s: GeneralisedTwoGraphState,
) -> tuple[GeneralisedTwoGraphState, list[tuple[str, int]]]:
    """Flatten: apply H at the smallest L-vertex until L is empty.

    Returns the resulting state (m = 1; loops and q may remain) and the
    transcript of applied operations.
    """
    transcript: list[tuple[str, int]] = []
    rows = list(s.g.rows)
    r, q = s.r, s.q
    lmask = ~r & ((1 << s.n) - 1)
    while lmask:
        v = (lmask & -lmask).bit_length() - 1
        r, q = _apply_h_rows(rows, r, q, v)
        transcript.append(("H", v))
        lmask = ~r & ((1 << s.n) - 1)
    return _wrap(s, rows, r, q), transcript


def canon(s: GeneralisedTwoGraphState) -> GeneralisedTwoGraphState:
    """Canonise: swap until every L-vertex is smaller than all its neighbours."""
    rows = list(s.g.rows)
    r, q = s.r, s.q
    full = (1 << s.n) - 1
    while True:
        lmask = ~r & full
        for v in bits(lmask):
            nv = rows[v] & ~(1 << v)
            if nv and v > (nv & -nv).bit_length() - 1:
                w = (nv & -nv).bit_length() - 1
                r, q = _swp_rows(rows, r, q, v, w)
                break
        else:
            return _wrap(s, rows, r, q)


def is_canonised(s: GeneralisedTwoGraphState) -> bool:
    for v in bits(s.l):
        nv = s.g.rows[v] & ~(1 << v)
        if nv and v > (nv & -nv).bit_length() - 1:
            return False
    return True


# -- algebraic polar form --------------------------------------------------


@dataclass(frozen=True)
class AlgebraicPolarForm:
    """Factored amplitude function: m = product of affine GF(2) factors,
    p = special-form quadratic over Z4 (even off-diagonal coefficients).

    factors: per L-vertex (support mask, constant bit); the support always
    contains the vertex itself (systematic form).
    quad: (i, j) pairs, i < j, each carrying coefficient 2.
    linear: per-vertex Z4 coefficient of x_v.
    """

    n: int
    factors: tuple[tuple[int, int], ...]
    quad: tuple[tuple[int, int], ...]
    linear: tuple[int, ...]

    def render(self) -> str:
        """Human-readable `m=...; p=...` string, e.g. `m=(x0+x1); p=2x0x1+x1`."""
        if self.factors:
            parts = []
            for mask, const in self.factors:
                terms = [f"x{v}" for v in bits(mask)]
                if const:
                    terms.append("1")
                parts.append("(" + "+".join(terms) + ")")
            m_str = "".join(parts)
        else:
            m_str = "1"
        p_terms = [f"2x{i}x{j}" for i, j in self.quad]
        p_terms += [
            ("" if c == 1 else str(c)) + f"x{v}"
            for v, c in enumerate(self.linear)
            if c
        ]
        return f"m={m_str}; p={'+'.join(p_terms) if p_terms else '0'}"


def to_apf(s: GeneralisedTwoGraphState) -> AlgebraicPolarForm:
    factors = []
    for v in bits(s.l):
        loop = s.g.rows[v] >> v & 1
        support = (s.g.rows[v] & ~(1 << v)) | (1 << v)
        factors.append((support, loop ^ 1))
    quad = []
    for i in bits(s.r):
        for j in bits(s.g.rows[i] & s.r & ~((1 << (i + 1)) - 1)):
            quad.append((i, j))
    linear = [0] * s.n
    for j in bits(s.r):
        linear[j] = (2 * (s.g.rows[j] >> j & 1) + (s.q >> j & 1)) % 4
    return AlgebraicPolarForm(s.n, tuple(factors), tuple(quad), tuple(linear))


@dataclass(frozen=True)
class ParityCheckMatrix:
    """Systematic parity check view of the magnitude factors."""

    n: int
    rows: tuple[int, ...]  # one mask per L-vertex, ascending
    coset_leader: int

    def as_strings(self) -> list[str]:
        return ["".join("1" if m >> v & 1 else "0" for v in range(self.n)) for m in self.rows]

    def leader_string(self) -> str:
        return "".join("1" if self.coset_leader >> v & 1 else "0" for v in range(self.n))


def to_parity_check(s: GeneralisedTwoGraphState) -> ParityCheckMatrix:
    rows = []
    leader = 0
    for v in bits(s.l):
        rows.append((s.g.rows[v] & ~(1 << v)) | (1 << v))
        if s.g.rows[v] >> v & 1:
            leader |= 1 << v
    return ParityCheckMatrix(s.n, tuple(rows), leader)


# -- mod-2 to mod-4 sum expansion -----------------------------------------

Monomial = frozenset
Gf2Poly = dict  # Monomial -> bit


def gf2_poly(terms: Iterable[Iterable[int]] = (), const: int = 0) -> Gf2Poly:
    """Build a GF(2) polynomial from variable-index tuples plus a constant."""
    p: Gf2Poly = {}
    for t in terms:
        key = frozenset(t)
        p[key] = p.get(key, 0) ^ 1
        if not p[key]:
            del p[key]
    if const:
        key = frozenset()
        p[key] = p.get(key, 0) ^ 1
        if not p[key]:
            del p[key]
    return p


def _gf2_mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    out: Gf2Poly = {}
    for ka in a:
        for kb in b:
            key = ka | kb  # x^2 = x
            out[key] = out.get(key, 0) ^ 1
            if not out[key]:
                del out[key]
    return out


def _gf2_sum(ps: Iterable[Gf2Poly]) -> Gf2Poly:
    out: Gf2Poly = {}
    for p in ps:
        for k, bit in p.items():
            out[k] = out.get(k, 0) ^ bit
            if not out[k]:
                del out[k]
    return out


def z2_sum_to_z4(terms: list[Gf2Poly]) -> dict:
    """Expand sum_i [A_i] (mod 4) of mod-2 bracketed terms.

    Uses [sum A_i] + 2 [sum_{i<j} A_i A_j]: the result maps monomials
    (frozensets of variable indices) to Z4 coefficients and must stay in
    special form (off-diagonal quadratic coefficients even, nothing cubic).
    """
    lin = _gf2_sum(terms)
    cross = _gf2_sum(
        _gf2_mul(terms[i], terms[j])
        for i in range(len(terms))
        for j in range(i + 1, len(terms))
    )
    out: dict = {}
    for k, bit in lin.items():
        out[k] = (out.get(k, 0) + bit) % 4
    for k, bit in cross.items():
        out[k] = (out.get(k, 0) + 2 * bit) % 4
    out = {k: c for k, c in out.items() if c}
    for k, c in out.items():
        if len(k) > 2:
            raise PreconditionError("mod-4 expansion left special form (cubic term)")
        if len(k) == 2 and c % 2:
            raise PreconditionError("mod-4 expansion left special form (odd cross term)")
    return out
