"""Spectral analysis over the 3^n local transforms {I, H, N}^(x)n.

The sweep walks all 3^n tensor words in reflected ternary Gray order.  The
digit alphabet is (I, N, N^2): stepping a digit forward applies N at that
position, stepping backward applies N^-1, so every leaf transition is one
rewrite.  N^2 and H differ only by diagonal factors, which cannot change
coefficient magnitudes, so the |L| census over (I, N, N^2) words equals the
census over (I, H, N) words — that census alone determines every L_j norm,
the merit factor and the peak-to-average ratio.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .gf2graph import Gf2Graph
from .state import (
    GeneralisedTwoGraphState,
    PreconditionError,
    _apply_n_inv_rows,
    _apply_n_rows,
    from_graph_state,
)

PRNG_NAME = "python-random-mersenne-twister"
DEFAULT_JS = (1.0, 2.0, 3.0, 4.0, 6.0, 8.0, math.inf)


@dataclass(frozen=True)
class TernaryWord:
    """A word over digits 0=I, 1=N, 2=N^2 identifying one tensor transform."""

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(d not in (0, 1, 2) for d in self.digits):
            raise PreconditionError("ternary digits must be 0, 1 or 2")

    def apply_from_scratch(
        self, s: GeneralisedTwoGraphState
    ) -> GeneralisedTwoGraphState:
        """Rebuild the leaf state by applying the digits left to right."""
        from .state import apply_n

        for v, d in enumerate(self.digits):
            for _ in range(d):
                s = apply_n(s, v)
        return s


@dataclass(frozen=True)
class SpectralReport:
    n: int
    l_census: dict[int, int]
    lj_norms: dict[float, float]
    cmf: float
    par_ihn: float
    sup_l: int
    meta: dict = field(default_factory=dict)


def state_lj_norm(l_size: int, j: float) -> float:
    """Single-transform norm 2^{(j-2) l / (2j)}."""
    if j <= 0:
        raise PreconditionError("j must be positive")
    if math.isinf(j):
        return 2.0 ** (l_size / 2)
    return 2.0 ** ((j - 2) * l_size / (2 * j))


def aggregate_norm(
    census: dict[int, int], n: int, j: float, integer_exponents: bool = False
) -> float:
    """(3^-n sum_U 2^{(j-2)|L_U|/2})^{1/j}.

    integer_exponents truncates each exponent (j-2)l/2 to an integer — the
    published-table convention for odd j; identical to the exact formula
    whenever the exponents are already integral (e.g. j = 4).
    """
    if j <= 0:
        raise PreconditionError("j must be positive")
    if math.isinf(j):
        return 2.0 ** (max(l for l, c in census.items() if c) / 2)
    total = 0.0
    for l_size, count in census.items():
        e = (j - 2) * l_size / 2
        if integer_exponents:
            e = math.floor(e)
        total += count * 2.0**e
    return (total / 3**n) ** (1 / j)


def cmf(report: SpectralReport) -> float:
    """Merit factor 1 / (||.||_4^4 - 1)."""
    n4 = report.lj_norms.get(4.0)
    if n4 is None:
        n4 = aggregate_norm(report.l_census, report.n, 4.0)
    assert n4 > 1, "fourth-power norm must exceed 1 for a connected state"
    return 1.0 / (n4**4 - 1.0)


def par_ihn(report: SpectralReport) -> float:
    return 2.0**report.sup_l


# -- the Gray-code census walk --------------------------------------------


def _census_walk(rows: list[int], r: int, q: int, n: int, start: int = 0) -> list[int]:
    """Visit all 3^(n-start) ternary words over digits start..n-1 once,
    one rewrite per transition.

    Returns census[l] = number of words whose transformed state has |L| = l.
    The walk mutates its arguments and leaves the state at the final word.
    """
    census = [0] * (n + 1)
    last = n - 1

    def rec(v: int, fwd: bool) -> None:
        nonlocal r, q
        step = _apply_n_rows if fwd else _apply_n_inv_rows
        if v == last:
            census[n - r.bit_count()] += 1
            r, q = step(rows, r, q, v)
            census[n - r.bit_count()] += 1
            r, q = step(rows, r, q, v)
            census[n - r.bit_count()] += 1
            return
        rec(v + 1, fwd)
        r, q = step(rows, r, q, v)
        rec(v + 1, not fwd)
        r, q = step(rows, r, q, v)
        rec(v + 1, fwd)

    if start >= n:
        return [0] * (n - r.bit_count()) + [1] + [0] * r.bit_count()
    rec(start, True)
    return census


def _subtree_census(args: tuple) -> list[int]:
    rows, r, q, n, prefix = args
    rows = list(rows)
    for v, d in enumerate(prefix):
        for _ in range(d):
            r, q = _apply_n_rows(rows, r, q, v)
    return _census_walk(rows, r, q, n, start=len(prefix))


def sweep(
    s: GeneralisedTwoGraphState,
    js: tuple[float, ...] = DEFAULT_JS,
    workers: int = 1,
    integer_exponents: bool = False,
) -> SpectralReport:
    """Census all 3^n transforms of s and aggregate the spectral metrics."""
    n = s.n
    if workers > 1:
        depth = min(n, math.ceil(math.log(workers, 3)))
        prefixes = [()]
        for _ in range(depth):
            prefixes = [p + (d,) for p in prefixes for d in (0, 1, 2)]
        tasks = [(tuple(s.g.rows), s.r, s.q, n, p) for p in prefixes]
        census = [0] * (n + 1)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for sub in pool.map(_subtree_census, tasks):
                for l_size, c in enumerate(sub):
                    census[l_size] += c
    else:
        census = _census_walk(list(s.g.rows), s.r, s.q, n)
    census_map = {l_size: c for l_size, c in enumerate(census) if c}
    assert sum(census_map.values()) == 3**n, "census does not cover all transforms"
    lj = {j: aggregate_norm(census_map, n, j, integer_exponents) for j in js}
    sup_l = max(census_map)
    n4 = lj.get(4.0, aggregate_norm(census_map, n, 4.0))
    return SpectralReport(
        n=n,
        l_census=census_map,
        lj_norms=lj,
        cmf=1.0 / (n4**4 - 1.0) if n4 > 1 else math.inf,
        par_ihn=2.0**sup_l,
        sup_l=sup_l,
        meta={"workers": workers, "integer_exponents": integer_exponents},
    )


# -- random graph sampling and the density sweep --------------------------


def random_connected_graph(
    n: int, density: float, rng: random.Random, resample_cap: int = 10000
) -> Gf2Graph:
    """G(n, p) conditioned on connectivity (rejection sampling)."""
    for _ in range(resample_cap):
        rows = [0] * n
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < density:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        if _connected(rows, n):
            return Gf2Graph(n, tuple(rows))
    raise PreconditionError(
        f"density {density} produced no connected graph in {resample_cap} tries"
    )


def _connected(rows: list[int], n: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in range(n):
            if frontier >> v & 1:
                nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def density_sweep(
    n: int,
    densities: tuple[float, ...],
    samples: int,
    seed: int,
    js: tuple[float, ...] = DEFAULT_JS,
    workers: int = 1,
) -> list[dict]:
    """Mean PAR and mean L_j norms of random connected graph states.

    One row per density; deterministic for a fixed seed (PRNG recorded in
    each row).  Per-sample reports are kept so callers can check
    distributional properties.
    """
    for d in densities:
        if not 0 < d <= 1:
            raise PreconditionError(f"density {d} outside (0, 1]")
    out = []
    for d in densities:
        rng = random.Random((seed, n, round(d * 1e9)).__hash__())
        reports = []
        for _ in range(samples):
            g = random_connected_graph(n, d, rng)
            reports.append(sweep(from_graph_state(g), js, workers=workers))
        row = {
            "n": n,
            "density": d,
            "samples": samples,
            "seed": seed,
            "prng": PRNG_NAME,
            "mean_par_ihn": sum(r.par_ihn for r in reports) / samples,
            "mean_lj": {
                j: sum(r.lj_norms[j] for r in reports) / samples for j in js
            },
            "reports": reports,
        }
        out.append(row)
    return out
