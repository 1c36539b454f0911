"""Connected-graph enumeration and local-complementation orbit classes.

Isomorphism is decided by exhaustive permutation canonisation (the
lexicographically minimal packed upper-triangle over all vertex
relabelings), vectorised with numpy — adequate through n = 7 where 7! =
5040.  Connected graphs are generated by augmentation: every connected
graph on k+1 vertices arises from a connected graph on k vertices by
attaching a new vertex to a nonempty neighbour set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .gf2graph import Gf2Graph, bits, lc
from .spectral import SpectralReport, sweep
from .state import PreconditionError, from_graph_state

MAX_CLASSIFY_N = 7

EXPECTED_CLASS_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 4, 6: 11, 7: 26}


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All n! permutations plus bit weights for packing the upper triangle."""
    perms = np.array(list(permutations(range(n))), dtype=np.intp)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    weights = np.zeros((n, n), dtype=np.int64)
    for k, (i, j) in enumerate(pairs):
        weights[i, j] = 1 << (len(pairs) - 1 - k)
    return perms, weights


def _adj_matrix(g: Gf2Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for i in range(g.n):
        for j in bits(g.rows[i]):
            a[i, j] = 1
    return a


def canonical_form(g: Gf2Graph) -> int:
    """Minimal packed upper triangle over all vertex permutations."""
    if not g.is_simple():
        raise PreconditionError("canonical_form handles simple graphs")
    n = g.n
    if n <= 1:
        return 0
    perms, weights = _perm_tables(n)
    a = _adj_matrix(g)
    relabeled = a[perms[:, :, None], perms[:, None, :]]
    packed = np.einsum("kij,ij->k", relabeled, weights)
    return int(packed.min())


def _from_packed(n: int, code: int) -> Gf2Graph:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [
        pairs[k] for k in range(len(pairs)) if code >> (len(pairs) - 1 - k) & 1
    ]
    return Gf2Graph.from_edges(n, edges)


def is_connected(g: Gf2Graph) -> bool:
    if g.n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Gf2Graph, ...]:
    """One representative per isomorphism class of connected simple graphs."""
    if not 1 <= n <= MAX_CLASSIFY_N:
        raise PreconditionError(f"n={n} outside 1..{MAX_CLASSIFY_N}")
    if n == 1:
        return (Gf2Graph.empty(1),)
    smaller = connected_graphs(n - 1)
    seen: set[int] = set()
    out = []
    for base in smaller:
        for attach in range(1, 1 << (n - 1)):
            rows = [row | ((attach >> v & 1) << (n - 1)) for v, row in enumerate(base.rows)]
            rows.append(attach)
            g = Gf2Graph(n, tuple(rows))
            code = canonical_form(g)
            if code not in seen:
                seen.add(code)
                out.append(_from_packed(n, code))
    return tuple(out)


def lc_orbit(g: Gf2Graph) -> tuple[Gf2Graph, ...]:
    """All isomorphism classes reachable from g by local complementations."""
    start = canonical_form(g)
    seen = {start}
    frontier = [_from_packed(g.n, start)]
    out = list(frontier)
    while frontier:
        nxt = []
        for h in frontier:
            for v in range(h.n):
                code = canonical_form(lc(h, v))
                if code not in seen:
                    seen.add(code)
                    rep = _from_packed(h.n, code)
                    nxt.append(rep)
                    out.append(rep)
        frontier = nxt
    return tuple(out)


@dataclass(frozen=True)
class OrbitClass:
    representative: Gf2Graph  # minimal canonical form over the whole orbit
    members: int  # number of isomorphism classes in the orbit
    spectra: SpectralReport | None


@lru_cache(maxsize=None)
def _class_partition(n: int) -> tuple[tuple[int, int], ...]:
    """(representative code, orbit size in isomorphism classes) per LC class."""
    remaining = {canonical_form(g): g for g in connected_graphs(n)}
    out = []
    while remaining:
        code, g = next(iter(remaining.items()))
        orbit = lc_orbit(g)
        codes = {canonical_form(h) for h in orbit}
        assert codes <= set(remaining), "orbit escaped the remaining pool"
        for c in codes:
            del remaining[c]
        out.append((min(codes), len(codes)))
    return tuple(out)


def enumerate_classes(
    n: int, with_spectra: bool = True, js: tuple[float, ...] = (3.0, 4.0)
) -> list[OrbitClass]:
    """Partition connected graphs on n vertices into LC-equivalence classes."""
    classes = []
    for code, members in _class_partition(n):
        rep = _from_packed(n, code)
        spectra = sweep(from_graph_state(rep), js) if with_spectra else None
        classes.append(OrbitClass(rep, members, spectra))
    return classes


def table1(n: int, j: float, integer_exponents: bool | None = None) -> dict:
    """Per-class norms with multiplicities, sorted descending, plus average.

    For j = 3 the published-table integer-exponent convention is the
    default; for j = 4 it makes no difference (integral exponents) and the
    CMF column is included.
    """
    if integer_exponents is None:
        integer_exponents = j != 4.0
    classes = enumerate_classes(n, with_spectra=False)
    rows = []
    for cl in classes:
        rep = sweep(
            from_graph_state(cl.representative),
            (j,),
            integer_exponents=integer_exponents,
        )
        rows.append(
            {
                "norm": rep.lj_norms[j],
                "cmf": rep.cmf if j == 4.0 else None,
                "frequency": 1,
                "representative": cl.representative,
            }
        )
    rows.sort(key=lambda r: -r["norm"])
    merged: list[dict] = []
    for r in rows:
        if merged and math.isclose(merged[-1]["norm"], r["norm"], abs_tol=5e-7) and (
            r["cmf"] is None or math.isclose(merged[-1]["cmf"], r["cmf"], abs_tol=5e-7)
        ):
            merged[-1]["frequency"] += 1
        else:
            merged.append(dict(r))
    avg = sum(r["norm"] * r["frequency"] for r in merged) / len(rows)
    return {"n": n, "j": j, "rows": merged, "average": avg, "classes": len(rows)}


def max_independent_set(g: Gf2Graph) -> int:
    """Exact maximum independent set size, brute force over subsets."""
    if g.n > 20:
        raise PreconditionError("brute-force independent set capped at n=20")
    best = 0
    rows = g.rows
    for sub in range(1 << g.n):
        if sub.bit_count() <= best:
            continue
        ok = True
        for v in bits(sub):
            if rows[v] & sub & ~(1 << v):
                ok = False
                break
        if ok:
            best = sub.bit_count()
    return best


def max_independent_set_over_orbit(g: Gf2Graph) -> int:
    if not (g.is_simple() and is_connected(g)):
        raise PreconditionError("expects a connected simple graph")
    return max(max_independent_set(h) for h in lc_orbit(g))
