"""Kazhdan-Lusztig cells, cell modules and Specht filtrations for the symmetric group.

Permutations are one-line forms (lists of 1..m) and act on the right.
Laurent coefficients are keyed by powers of q^(1/2).
"""

from ._klspecht import (
    basis_element,
    c_semistandard_tableaux,
    cells,
    induce_cell,
    induced_cell_filtration,
    induced_specht_filtration,
    kl_polynomial,
    kl_table,
    quality_and_sharp,
    restrict_cell,
    restricted_cell_filtration,
    restricted_specht_filtration,
    right_cell,
    rs_insert,
    run_cli,
    sequences_of_type,
    specht_basis_size,
    verify_pairs,
    verify_parabolic_expansion,
    w_of_sequence,
)

__all__ = [
    "basis_element",
    "c_semistandard_tableaux",
    "cells",
    "induce_cell",
    "induced_cell_filtration",
    "induced_specht_filtration",
    "kl_polynomial",
    "kl_table",
    "quality_and_sharp",
    "restrict_cell",
    "restricted_cell_filtration",
    "restricted_specht_filtration",
    "right_cell",
    "rs_insert",
    "run_cli",
    "sequences_of_type",
    "specht_basis_size",
    "verify_pairs",
    "verify_parabolic_expansion",
    "w_of_sequence",
]
