"""Command-line driver.

Subcommands: apply, spectra, classify, oracle-check, density-sweep.
Exit codes: 0 ok, 2 parse error, 3 precondition violation, 4 internal
invariant breach (including oracle mismatches).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import re
import sys

from . import __version__
from .gf2graph import GraphError
from .serialize import ParseError, parse_state, serialize_state
from .spectral import DEFAULT_JS, PRNG_NAME, density_sweep, sweep
from .state import (
    GeneralisedTwoGraphState,
    PreconditionError,
    StateInvariantError,
    apply_h,
    apply_lambda,
    apply_lambda_sq,
    apply_n,
    apply_n_inv,
    canon,
    swp,
    to_apf,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4

_OP_RE = re.compile(r"^(Ninv|L2|[HNL])(\d+)$")
_SWAP_RE = re.compile(r"^swap\((\d+),(\d+)\)$")

_OPS = {
    "H": apply_h,
    "N": apply_n,
    "Ninv": apply_n_inv,
    "L": apply_lambda,
    "L2": apply_lambda_sq,
}


def parse_ops(tokens: list[str]) -> list[tuple]:
    """Tokens: H3 N0 Ninv2 L1 L23 swap(1,3) canon.

    Longest operator prefix wins, so `L23` is lambda-squared at vertex 3,
    not lambda at vertex 23.
    """
    ops = []
    for tok in tokens:
        if tok == "canon":
            ops.append(("canon",))
            continue
        m = _SWAP_RE.match(tok)
        if m:
            ops.append(("swap", int(m.group(1)), int(m.group(2))))
            continue
        m = _OP_RE.match(tok)
        if m:
            ops.append((m.group(1), int(m.group(2))))
            continue
        raise ParseError(f"cannot parse op token {tok!r}")
    return ops


def run_ops(s: GeneralisedTwoGraphState, ops: list[tuple]) -> GeneralisedTwoGraphState:
    for op in ops:
        try:
            if op[0] == "canon":
                s = canon(s)
            elif op[0] == "swap":
                s = swp(s, op[1], op[2])
            else:
                s = _OPS[op[0]](s, op[1])
        except PreconditionError as e:
            raise PreconditionError(f"op {op}: {e}") from None
    return s


def _read_state(path: str) -> GeneralisedTwoGraphState:
    try:
        with open(path) as fh:
            return parse_state(fh.read())
    except OSError as e:
        raise ParseError(str(e)) from None


def cmd_apply(args: argparse.Namespace) -> int:
    s = _read_state(args.state_file)
    s = run_ops(s, parse_ops(args.ops))
    doc = serialize_state(s, fmt=args.format)
    sys.stdout.write(doc)
    print(to_apf(s).render())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc)
    return EXIT_OK


def _parse_js(text: str) -> tuple[float, ...]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        out.append(math.inf if tok in ("inf", "oo") else float(tok))
    return tuple(out)


def cmd_spectra(args: argparse.Namespace) -> int:
    s = _read_state(args.state_file)
    report = sweep(s, _parse_js(args.j), workers=args.workers)
    payload = {
        "tool_version": __version__,
        "workers": args.workers,
        "n": report.n,
        "l_census": {str(k): v for k, v in sorted(report.l_census.items())},
        "lj_norms": {str(k): v for k, v in report.lj_norms.items()},
        "cmf": report.cmf,
        "par_ihn": report.par_ihn,
        "sup_l": report.sup_l,
    }
    text = json.dumps(payload, indent=2)
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    from .orbits import table1

    table = table1(args.n, float(args.j))
    rows = [
        {
            "norm": f"{r['norm']:.6f}",
            "cmf": "" if r["cmf"] is None else f"{r['cmf']:.6f}",
            "frequency": r["frequency"],
        }
        for r in table["rows"]
    ]
    writer = csv.DictWriter(sys.stdout, fieldnames=["norm", "cmf", "frequency"])
    writer.writeheader()
    writer.writerows(rows)
    print(f"# average {table['average']:.6f} classes {table['classes']}")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=["norm", "cmf", "frequency"])
            w.writeheader()
            w.writerows(rows)
            fh.write(f"# average {table['average']:.6f} classes {table['classes']}\n")
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    import numpy as np

    from .dense import UNITARIES, apply_local, equal_up_to_global, evaluate_state
    from .gf2graph import Gf2Graph

    states: list[GeneralisedTwoGraphState] = []
    if args.state_file:
        states.append(_read_state(args.state_file))
    else:
        rng = random.Random(args.seed)
        for _ in range(args.random):
            n = rng.randint(2, args.max_n)
            states.append(_random_state(n, rng))
    checked = 0
    for s in states:
        base = evaluate_state(s)
        for v in range(s.n):
            for name, op in (("H", apply_h), ("N", apply_n), ("Ninv", apply_n_inv)):
                got = evaluate_state(op(s, v))
                want = apply_local(base, UNITARIES[{"Ninv": "N_inv"}.get(name, name)], v)
                checked += 1
                if not equal_up_to_global(got, want):
                    print(
                        f"oracle mismatch: op {name}{v} on "
                        f"{serialize_state(s, fmt='json')}",
                        file=sys.stderr,
                    )
                    return EXIT_INTERNAL
        got = evaluate_state(canon(s))
        checked += 1
        if not equal_up_to_global(got, base):
            print(f"canon broke the state: {serialize_state(s)}", file=sys.stderr)
            return EXIT_INTERNAL
    print(f"oracle-check ok: {checked} comparisons on {len(states)} states")
    return EXIT_OK


def _random_state(n: int, rng: random.Random) -> GeneralisedTwoGraphState:
    from .gf2graph import Gf2Graph

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


def cmd_density_sweep(args: argparse.Namespace) -> int:
    densities = tuple(float(t) for t in args.densities.split(","))
    rows = density_sweep(args.n, densities, args.samples, args.seed, _parse_js(args.j))
    fields = ["n", "density", "samples", "seed", "prng", "mean_par_ihn"]
    js = _parse_js(args.j)
    header = fields + [f"mean_l{j:g}" for j in js]
    writer = csv.writer(sys.stdout)
    writer.writerow(header)
    table = []
    for row in rows:
        rec = [row[f] for f in fields] + [f"{row['mean_lj'][j]:.6f}" for j in js]
        writer.writerow(rec)
        table.append(rec)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            w.writerows(table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twograph", description=__doc__)
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("apply", help="apply a rewrite sequence to a state file")
    p.add_argument("state_file")
    p.add_argument("ops", nargs="*", help="e.g. H3 N0 Ninv2 L1 L23 swap(1,3) canon")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_apply)

    p = sub.add_parser("spectra", help="census all 3^n transforms of a state")
    p.add_argument("state_file")
    p.add_argument("--j", default="1,2,3,4,6,8,inf")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_spectra)

    p = sub.add_parser("classify", help="orbit classification table for n <= 7")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", default="4")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("oracle-check", help="dense-oracle soundness suite")
    p.add_argument("state_file", nargs="?")
    p.add_argument("--random", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=6)
    p.set_defaults(fn=cmd_oracle_check)

    p = sub.add_parser("density-sweep", help="random-graph spectra vs density")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--densities", default="0.1,0.5,1.0")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--j", default="1,2,3,4,6,8,inf")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_density_sweep)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, GraphError) as e:
        print(f"precondition violation: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (StateInvariantError, AssertionError) as e:
        print(f"internal invariant breach: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
