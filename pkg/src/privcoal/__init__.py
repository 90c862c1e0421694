"""Privileged-coalition theory for Shamir-style sharing with the secret
in an arbitrary coefficient: coalition enumeration over prime fields,
multi-secret access structures, the full deal/recover protocol, and an
exhaustive perfectness auditor."""

__version__ = "0.1.0"

from .audit import (
    ALL_NONZERO,
    FULL_FIELD,
    AuditReport,
    conditional_distribution,
    consistent_polynomials,
    ideality_check,
    perfectness_report,
)
from .coalition import (
    CoalitionQuery,
    CoalitionReport,
    enumerate_tracks,
    extension_condition,
    is_minimal_privileged,
    is_privileged,
    is_unextended,
    minimal_privileged_coalitions,
    privileged_coalitions,
    privileged_rank_oracle,
    valid_lengths,
)
from .errors import AuthorizationError, CapacityError, ParameterError
from .field import FieldElement, PrimeField, is_prime
from .scheme import (
    AccessStructure,
    AuthorizedSet,
    SchemeConfig,
    SecretVector,
    ShareTable,
    deal,
    derive_access_structure,
    extension_track,
    recover,
    recover_full,
    recover_privileged,
    solve_shares,
)
from .symfun import (
    Track,
    as_track,
    elem_sym,
    elem_sym_all,
    generalized_vandermonde_det,
    poly_eval,
    vandermonde_det,
)

__all__ = [
    "ALL_NONZERO",
    "AccessStructure",
    "AuditReport",
    "AuthorizationError",
    "AuthorizedSet",
    "CapacityError",
    "CoalitionQuery",
    "CoalitionReport",
    "FULL_FIELD",
    "FieldElement",
    "ParameterError",
    "PrimeField",
    "SchemeConfig",
    "SecretVector",
    "ShareTable",
    "Track",
    "as_track",
    "conditional_distribution",
    "consistent_polynomials",
    "deal",
    "derive_access_structure",
    "elem_sym",
    "elem_sym_all",
    "enumerate_tracks",
    "extension_condition",
    "extension_track",
    "generalized_vandermonde_det",
    "ideality_check",
    "is_minimal_privileged",
    "is_prime",
    "is_privileged",
    "is_unextended",
    "minimal_privileged_coalitions",
    "perfectness_report",
    "poly_eval",
    "privileged_coalitions",
    "privileged_rank_oracle",
    "recover",
    "recover_full",
    "recover_privileged",
    "solve_shares",
    "valid_lengths",
    "vandermonde_det",
]
