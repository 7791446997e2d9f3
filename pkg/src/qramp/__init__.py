"""Quantum ramp secret sharing for general access structures via optimal multiple assignment."""
from .access import AccessStructure, SubsetClass, check_self_dual, is_qualified, maximal_forbidden
from .codes import (
    NestedCodePair,
    QuantumScheme,
    build_rs_pair,
    build_scheme,
    expand_phi,
    reconstruct_classical,
    share_classical,
)
from .optimizer import brute_force_ip, build_ip, solution_to_assignment, solve_ip
from .simulate import certify_forbidden, cross_check, encode_css, partial_trace
from .verify import classify_subset, derive_quantum_access, verify_against_spec

__all__ = [
    "AccessStructure",
    "NestedCodePair",
    "QuantumScheme",
    "SubsetClass",
    "brute_force_ip",
    "build_ip",
    "build_rs_pair",
    "build_scheme",
    "certify_forbidden",
    "check_self_dual",
    "classify_subset",
    "cross_check",
    "derive_quantum_access",
    "encode_css",
    "expand_phi",
    "is_qualified",
    "maximal_forbidden",
    "partial_trace",
    "reconstruct_classical",
    "share_classical",
    "solution_to_assignment",
    "solve_ip",
    "verify_against_spec",
]
