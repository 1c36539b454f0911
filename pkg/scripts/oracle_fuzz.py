#!/usr/bin/env python3
"""Randomized soundness fuzzer: rewrite engine vs dense statevector oracle.

Samples random (G, R, Q) states and checks every local rewrite against
explicit 2^n linear algebra: H/N/N^-1/lambda/lambda^2 up to one global
scalar, and swp/canon/to_graph_state for state preservation up to a global
scalar.  Exits nonzero on the first mismatch and prints the offending
state.
"""

import argparse
import random
import sys

from twograph import (
    GeneralisedTwoGraphState,
    Gf2Graph,
    apply_h,
    apply_lambda,
    apply_lambda_sq,
    apply_n,
    apply_n_inv,
    bits,
    canon,
    swp,
    to_graph_state,
)
from twograph.dense import UNITARIES, apply_local, equal_up_to_global, evaluate_state
from twograph.serialize import serialize_state


def random_state(n: int, rng: random.Random) -> GeneralisedTwoGraphState:
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

OPS = [
    (apply_h, "H"),
    (apply_n, "N"),
    (apply_n_inv, "N_inv"),
    (apply_lambda, "lambda"),
    (apply_lambda_sq, "lambda_sq"),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--states", type=int, default=2000)
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    checks = 0
    for k in range(args.states):
        n = rng.randint(2, args.max_n)
        s = random_state(n, rng)
        base = evaluate_state(s)
        for v in range(n):
            for op, name in OPS:
                if not equal_up_to_global(
                    evaluate_state(op(s, v)), apply_local(base, UNITARIES[name], v)
                ):
                    print(f"MISMATCH {name}{v} on:\n{serialize_state(s)}")
                    return 1
                checks += 1
        if not equal_up_to_global(evaluate_state(canon(s)), base):
            print(f"MISMATCH canon on:\n{serialize_state(s)}")
            return 1
        checks += 1
        flat, transcript = to_graph_state(s)
        want = base
        for _, v in transcript:
            want = apply_local(want, UNITARIES["H"], v)
        if not equal_up_to_global(evaluate_state(flat), want):
            print(f"MISMATCH to_graph_state on:\n{serialize_state(s)}")
            return 1
        checks += 1
        lmask = list(bits(s.l))
        if lmask:
            v = rng.choice(lmask)
            nbrs = list(bits(s.g.rows[v] & ~(1 << v)))
            if nbrs:
                w = rng.choice(nbrs)
                if not equal_up_to_global(evaluate_state(swp(s, v, w)), base):
                    print(f"MISMATCH swp({v},{w}) on:\n{serialize_state(s)}")
                    return 1
                checks += 1
        if (k + 1) % 500 == 0:
            print(f"{k + 1} states, {checks} checks ok", file=sys.stderr)
    print(f"ok: {checks} checks on {args.states} states")
    return 0


if __name__ == "__main__":
    sys.exit(main())
