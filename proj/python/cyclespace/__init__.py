"""Exact cycle-space, invariant-projection, and transportation-cost computations."""

from cyclespace._core import (
    CyclespaceError,
    Graph,
    automorphism_count,
    canonical_graph,
    cube_coefficients,
    cube_p_norm,
    cube_q_norm,
    cut_basis,
    cycle_basis,
    cycle_space_dimension,
    dual_certificate,
    graph,
    hamming,
    invariant_dimension,
    tc_norm,
    torus,
    torus_report,
    wasserstein1,
)

__all__ = [
    "CyclespaceError",
    "Graph",
    "automorphism_count",
    "canonical_graph",
    "cube_coefficients",
    "cube_p_norm",
    "cube_q_norm",
    "cut_basis",
    "cycle_basis",
    "cycle_space_dimension",
    "dual_certificate",
    "graph",
    "hamming",
    "invariant_dimension",
    "tc_norm",
    "torus",
    "torus_report",
    "wasserstein1",
]
