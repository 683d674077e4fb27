"""Exact models of the commuting operator families attached to the
GL_n action on polynomials on n x r matrices.

Everything is computed in exact rational arithmetic; operators are returned
in a canonical normal-form serialization, verification commands return a
report dictionary with a boolean ``pass`` entry.
"""

from biggl._core import (
    c_k,
    capelli_generator,
    check_bethe_bridge,
    check_capelli,
    check_cauchy_binet,
    check_charpoly,
    check_commute,
    check_dhat,
    check_relations,
    check_symdet,
    check_yang_baxter,
    epsilon,
    f_pq,
    falling_factorial,
    lagrange_sum,
    m_pq,
    present,
    sgn_block,
    sgn_pair,
    stirling2,
    theta_poly,
    upsilon_rank,
    weight_diagram,
)

__all__ = [
    "c_k",
    "capelli_generator",
    "check_bethe_bridge",
    "check_capelli",
    "check_cauchy_binet",
    "check_charpoly",
    "check_commute",
    "check_dhat",
    "check_relations",
    "check_symdet",
    "check_yang_baxter",
    "epsilon",
    "f_pq",
    "falling_factorial",
    "lagrange_sum",
    "m_pq",
    "present",
    "sgn_block",
    "sgn_pair",
    "stirling2",
    "theta_poly",
    "upsilon_rank",
    "weight_diagram",
]
