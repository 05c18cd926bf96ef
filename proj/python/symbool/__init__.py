"""Exact linear Boolean algebra computations.

Rationals come back as fractions.Fraction.  Subsets are tuples of 1-based
elements; multiset classes are sorted tuples of subsets.
"""

from ._symbool import (
    BudgetExceeded,
    InconsistencyError,
    classical_ie,
    closed_complement,
    closed_intersection,
    closed_union,
    coinvariant_table,
    dist_product,
    failed_axioms,
    failed_axioms_coinvariant,
    failed_axioms_json,
    ie_verify,
    nfold_union,
    orbit_count,
    run_cli,
    stone_atoms,
    verify_closed_forms,
)

__all__ = [
    "BudgetExceeded",
    "InconsistencyError",
    "classical_ie",
    "closed_complement",
    "closed_intersection",
    "closed_union",
    "coinvariant_table",
    "dist_product",
    "failed_axioms",
    "failed_axioms_coinvariant",
    "failed_axioms_json",
    "ie_verify",
    "nfold_union",
    "orbit_count",
    "run_cli",
    "stone_atoms",
    "verify_closed_forms",
]
