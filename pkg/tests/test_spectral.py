import math
import random

import pytest

from twograph import PreconditionError, from_graph_state
from twograph.spectral import (
    DEFAULT_JS,
    TernaryWord,
    aggregate_norm,
    cmf,
    density_sweep,
    par_ihn,
    random_connected_graph,
    state_lj_norm,
    sweep,
)

from conftest import path_graph, random_state


def brute_census(s):
    """|L| census over all 3^n words, each applied from scratch."""
    census = {}
    words = [()]
    for _ in range(s.n):
        words = [w + (d,) for w in words for d in (0, 1, 2)]
    for w in words:
        t = TernaryWord(w).apply_from_scratch(s)
        l_size = t.l.bit_count()
        census[l_size] = census.get(l_size, 0) + 1
    return census


def test_path3_report():
    rep = sweep(from_graph_state(path_graph(3)))
    assert rep.l_census == {0: 16, 1: 10, 2: 1}
    assert rep.sup_l == 2
    assert rep.par_ihn == 4.0
    assert math.isclose(rep.lj_norms[4.0], 1.103250, abs_tol=1e-6)
    assert math.isclose(rep.cmf, 2.076923, abs_tol=1e-6)
    assert math.isclose(cmf(rep), rep.cmf)
    assert par_ihn(rep) == rep.par_ihn


def test_single_vertex_census():
    rep = sweep(from_graph_state(path_graph(1)))
    # I and N leave the one-qubit state flat; N^2 (HZ-like) does not.
    assert rep.l_census == {0: 2, 1: 1}
    assert math.isclose(rep.lj_norms[4.0], (4 / 3) ** 0.25, abs_tol=1e-12)


def test_state_lj_norm():
    assert state_lj_norm(3, 2.0) == 1.0
    assert state_lj_norm(3, math.inf) == 2.0**1.5
    assert math.isclose(state_lj_norm(2, 4.0), 2.0**0.5)
    with pytest.raises(PreconditionError):
        state_lj_norm(1, 0.0)


def test_aggregate_norm_integer_exponents():
    census = {0: 16, 1: 10, 2: 1}
    exact = aggregate_norm(census, 3, 3.0)
    floored = aggregate_norm(census, 3, 3.0, integer_exponents=True)
    # exponent (j-2)l/2 = l/2 gets truncated for odd l
    want_floored = ((16 + 10 * 2**0 + 1 * 2**1) / 27) ** (1 / 3)
    want_exact = ((16 + 10 * 2**0.5 + 1 * 2**1) / 27) ** (1 / 3)
    assert math.isclose(floored, want_floored, rel_tol=1e-12)
    assert math.isclose(exact, want_exact, rel_tol=1e-12)
    assert aggregate_norm(census, 3, 4.0) == aggregate_norm(
        census, 3, 4.0, integer_exponents=True
    )
    assert aggregate_norm(census, 3, math.inf) == 2.0


def test_ternary_word_validation():
    with pytest.raises(PreconditionError):
        TernaryWord((0, 3))


def test_walk_census_matches_from_scratch():
    rng = random.Random(5)
    for _ in range(10):
        s = random_state(rng.randint(1, 3), rng)
        rep = sweep(s, (4.0,))
        assert rep.l_census == brute_census(s)


def test_worker_count_does_not_change_the_census():
    s = from_graph_state(path_graph(4))
    lone = sweep(s, (4.0,))
    multi = sweep(s, (4.0,), workers=3)
    assert lone.l_census == multi.l_census
    assert lone.lj_norms == multi.lj_norms


def test_random_connected_graph():
    rng = random.Random(0)
    for _ in range(20):
        g = random_connected_graph(6, 0.4, rng)
        rep = sweep(from_graph_state(g), (4.0,))
        assert sum(rep.l_census.values()) == 3**6
    complete = random_connected_graph(4, 1.0, rng)
    assert len(complete.edges()) == 6
    with pytest.raises(PreconditionError):
        random_connected_graph(8, 1e-9, rng, resample_cap=10)


def test_density_sweep_is_deterministic():
    a = density_sweep(4, (0.5,), samples=3, seed=42, js=(2.0, 4.0))
    b = density_sweep(4, (0.5,), samples=3, seed=42, js=(2.0, 4.0))
    assert a[0]["mean_par_ihn"] == b[0]["mean_par_ihn"]
    assert a[0]["mean_lj"] == b[0]["mean_lj"]
    assert a[0]["prng"] == "python-random-mersenne-twister"
    assert len(a[0]["reports"]) == 3
    with pytest.raises(PreconditionError):
        density_sweep(4, (0.0,), samples=1, seed=0)


def test_default_js():
    assert math.inf in DEFAULT_JS and 4.0 in DEFAULT_JS
