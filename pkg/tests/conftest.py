"""Shared fixtures and random-object helpers for the test suite."""

from __future__ import annotations

import random

from twograph import GeneralisedTwoGraphState, Gf2Graph, mask_of

# The recurring 5-vertex worked example ("EX5"): graph with edge set
# {02,03,12,13,23,24,34} plus loops at 1 and 3, systematic set R = {2,3,4}.
EX5_EDGES = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (1, 1), (3, 3)]
EX5_R = mask_of([2, 3, 4])
EX5_Q = mask_of([2, 3])


def ex5_boolean() -> GeneralisedTwoGraphState:
    return GeneralisedTwoGraphState(Gf2Graph.from_edges(5, EX5_EDGES), EX5_R, 0)


def ex5_general() -> GeneralisedTwoGraphState:
    return GeneralisedTwoGraphState(Gf2Graph.from_edges(5, EX5_EDGES), EX5_R, EX5_Q)


def path_graph(n: int) -> Gf2Graph:
    return Gf2Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def random_simple_graph(n: int, rng: random.Random, p: float = 0.5) -> Gf2Graph:
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Gf2Graph(n, tuple(rows))


def random_state(n: int, rng: random.Random) -> GeneralisedTwoGraphState:
    """A uniform-ish valid (G, R, Q) triple: no edges inside L, Q subset of R."""
    r = rng.getrandbits(n)
    rows = [0] * n
    for i in range(n):
        if rng.random() < 0.4:
            rows[i] |= 1 << i
        for j in range(i + 1, n):
            if ((r >> i & 1) or (r >> j & 1)) and rng.random() < 0.5:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return GeneralisedTwoGraphState(Gf2Graph(n, tuple(rows)), r, rng.getrandbits(n) & r)


def all_states(n: int):
    """Every valid (G, R, Q) triple on n vertices (use only for tiny n)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for r in range(1 << n):
        allowed = [
            (i, j) for i, j in pairs if (r >> i & 1) or (r >> j & 1)
        ]
        for esel in range(1 << len(allowed)):
            base = [0] * n
            for k, (i, j) in enumerate(allowed):
                if esel >> k & 1:
                    base[i] |= 1 << j
                    base[j] |= 1 << i
            for loops in range(1 << n):
                rows = [base[v] | ((loops >> v & 1) << v) for v in range(n)]
                q_bits = r
                for q in _submasks(q_bits):
                    yield GeneralisedTwoGraphState(
                        Gf2Graph(n, tuple(rows)), r, q
                    )


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
