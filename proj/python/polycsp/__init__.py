"""Polynomial CSP sparsification toolkit."""

from ._core import (
    FormatError,
    ResourceError,
    StructuralError,
    bezout,
    cli,
    degree_composition,
    encode,
    erbds_cross,
    find_prime_ap,
    howell_form,
    or_polynomial,
    primesat_from_cnf,
    satisfying_assignments,
    sparsify,
    stats,
    tree_gadget,
    verify_equivalent,
)

__all__ = [
    "FormatError",
    "ResourceError",
    "StructuralError",
    "bezout",
    "cli",
    "degree_composition",
    "encode",
    "erbds_cross",
    "find_prime_ap",
    "howell_form",
    "or_polynomial",
    "primesat_from_cnf",
    "satisfying_assignments",
    "sparsify",
    "stats",
    "tree_gadget",
    "verify_equivalent",
]
