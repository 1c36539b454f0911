"""Brute-force dense statevector oracle.

Everything the graphical calculus claims is checked here against explicit
2^n amplitude vectors.  Index convention is big-endian: x_0 is the most
significant bit of the amplitude index.  Capped at n = 14.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2graph import Gf2Graph, bits
from .state import AlgebraicPolarForm, GeneralisedTwoGraphState, PreconditionError, to_apf

MAX_ORACLE_N = 14

OMEGA = np.exp(1j * np.pi / 4)

_S2 = 1 / np.sqrt(2)
UNITARIES: dict[str, np.ndarray] = {
    "I": np.eye(2, dtype=complex),
    "H": np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex),
    "N": np.array([[_S2, _S2 * 1j], [_S2, -_S2 * 1j]], dtype=complex),
    "S": np.array([[1, 0], [0, 1j]], dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
UNITARIES["N_inv"] = UNITARIES["N"].conj().T
UNITARIES["lambda"] = OMEGA**5 * UNITARIES["N"]
UNITARIES["lambda_sq"] = UNITARIES["lambda"] @ UNITARIES["lambda"]


@dataclass(frozen=True)
class DenseState:
    n: int
    amps: np.ndarray

    def normalized(self) -> "DenseState":
        nrm = np.linalg.norm(self.amps)
        if nrm == 0:
            raise PreconditionError("cannot normalize the zero vector")
        return DenseState(self.n, self.amps / nrm)


def _bit_table(n: int) -> np.ndarray:
    """(2^n, n) array: column v holds x_v for every index (big-endian)."""
    idx = np.arange(1 << n)
    return (idx[:, None] >> (n - 1 - np.arange(n))) & 1


def evaluate_raw(apf: AlgebraicPolarForm) -> DenseState:
    """amps[x] = m(x) * i^p(x), without normalization."""
    n = apf.n
    if n > MAX_ORACLE_N:
        raise PreconditionError(f"oracle capped at n={MAX_ORACLE_N}")
    x = _bit_table(n)
    m = np.ones(1 << n, dtype=np.int64)
    for mask, const in apf.factors:
        acc = np.full(1 << n, const, dtype=np.int64)
        for v in bits(mask):
            acc ^= x[:, v]
        m &= acc
    assert m.any(), "magnitude identically zero: invalid systematic factors"
    p = np.zeros(1 << n, dtype=np.int64)
    for i, j in apf.quad:
        p += 2 * x[:, i] * x[:, j]
    for v, c in enumerate(apf.linear):
        if c:
            p += c * x[:, v]
    return DenseState(n, m * (1j ** (p % 4)))


def evaluate(apf: AlgebraicPolarForm) -> DenseState:
    """amps[x] = m(x) * i^p(x), normalized."""
    return evaluate_raw(apf).normalized()


def evaluate_state(s: GeneralisedTwoGraphState) -> DenseState:
    return evaluate(to_apf(s))


def apply_local(st: DenseState, u: np.ndarray, v: int) -> DenseState:
    """Apply a 2x2 unitary at tensor position v."""
    if not 0 <= v < st.n:
        raise PreconditionError(f"vertex {v} out of range")
    t = st.amps.reshape([2] * st.n)
    t = np.tensordot(u, t, axes=([1], [v]))
    return DenseState(st.n, np.moveaxis(t, 0, v).reshape(-1))


def equal_up_to_global(a: DenseState, b: DenseState, tol: float = 1e-9) -> bool:
    """True iff a = c * b for one complex scalar c (matched at b's peak)."""
    if a.n != b.n:
        return False
    k = int(np.argmax(np.abs(b.amps)))
    if abs(b.amps[k]) <= tol:
        return bool(np.allclose(a.amps, b.amps, atol=tol))
    c = a.amps[k] / b.amps[k]
    return bool(np.allclose(a.amps, c * b.amps, atol=tol))


def global_scalar(a: DenseState, b: DenseState, tol: float = 1e-9) -> complex:
    """The scalar c with a = c * b; raises if the states are not proportional."""
    k = int(np.argmax(np.abs(b.amps)))
    c = a.amps[k] / b.amps[k]
    if not np.allclose(a.amps, c * b.amps, atol=tol):
        raise PreconditionError("states are not equal up to a global scalar")
    return complex(c)


def stabilizer_check(p_graph: Gf2Graph, st: DenseState, tol: float = 1e-9) -> bool:
    """True iff X_j prod_k Z_k^{G_jk} fixes st for every vertex j."""
    if not p_graph.is_simple():
        raise PreconditionError("stabilizer generators need a simple graph")
    x = _bit_table(st.n)
    idx = np.arange(1 << st.n)
    for j in range(p_graph.n):
        flipped = idx ^ (1 << (st.n - 1 - j))
        sign = np.ones(1 << st.n)
        for k in bits(p_graph.rows[j]):
            sign = sign * (1 - 2 * x[:, k])
        # (K_j psi)[x] = sign(x) * psi[x ^ e_j]; Z phases act after X here,
        # matching Z evaluated at the output index.
        out = sign * st.amps[flipped]
        if not np.allclose(out, st.amps, atol=tol):
            return False
    return True


def cofactor(st: DenseState, v: int, bit: int) -> DenseState:
    """Restrict x_v = bit, yielding the half-length vector on the rest."""
    if not 0 <= v < st.n:
        raise PreconditionError(f"vertex {v} out of range")
    t = st.amps.reshape([2] * st.n)
    return DenseState(st.n - 1, np.take(t, bit, axis=v).reshape(-1))
