"""Stabilizer states as generalised two-graph triples (G, R, Q), their
rewrite calculus, a dense statevector oracle, spectral sweeps over the 3^n
local transforms, and LC-orbit classification of small connected graphs."""

__version__ = "0.1.0"

from .gf2graph import (
    Gf2Graph,
    GraphError,
    bipartite_k,
    bits,
    closed_ball,
    complete_graph,
    delta,
    elc_loop,
    graph_add,
    lc,
    mask_of,
    open_neighborhood,
    vertices_of,
)
from .state import (
    AlgebraicPolarForm,
    GeneralisedTwoGraphState,
    ParityCheckMatrix,
    PreconditionError,
    StateInvariantError,
    apply_h,
    apply_lambda,
    apply_lambda_sq,
    apply_n,
    apply_n_inv,
    canon,
    from_graph_state,
    is_canonised,
    lc_loop,
    swp,
    to_apf,
    to_graph_state,
    to_parity_check,
    z2_sum_to_z4,
)

__all__ = [name for name in dir() if not name.startswith("_")]
