"""Exact exterior calculus and involutivity checks on Lie algebroids.

Frame, coframe and multi-indices are 1-based throughout, matching definition
files and check reports.
"""

from ._core import (
    AlgcalcError,
    CheckReport,
    DefinitionError,
    Definition,
    DifferentialForm,
    DimensionError,
    DivisionByZero,
    LieAlgebroid,
    ParseError,
    PoleError,
    RankDeficiency,
    RunReport,
    ScalarExpr,
    Section,
    UsageError,
    anchor_apply,
    annihilator,
    apply_form,
    bracket,
    cartan_test,
    default_selection,
    eds_closure_check,
    ext_deriv,
    ideal_certificate,
    ideal_membership,
    interior,
    involutive_bracket_test,
    involutivity_verdicts,
    lie_derivative,
    load_definition,
    maurer_cartan_check,
    parse_definition,
    parse_expr,
    partial,
    run_checks,
    validate,
    vanishes_on_ids,
    verify_calculus_identities,
    wedge,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
