"""Exact constraint systems for torsion units in integral group rings.

The package generates the trace-integrality constraints that ordinary and
modular characters impose on the partial augmentations of a torsion unit,
solves them by complete integer enumeration, and ships the character-table
snippets and golden datasets for the three Conway groups.
"""

from .chartable import CharTable, Character, ConjClass, parse_table, serialize_table
from .cyclotomic import CycInt, Rational, parse_cyc, render_cyc, root_trace
from .lpcore import (
    LinearForm,
    MuConstraint,
    PaVar,
    candidate_orders,
    classify_rational,
    hertweck_zero,
    mu_form,
    variable_layout,
)
from .solver import ChainResult, CspInstance, PaSolution, chain_solve, propagate, solve
from .stconstant import (
    RuleOutReport,
    StConstraintRow,
    find_st_combinations,
    is_st_constant,
    rule_out_order,
    st_row,
)

__all__ = [
    "CharTable",
    "Character",
    "ConjClass",
    "CycInt",
    "Rational",
    "LinearForm",
    "MuConstraint",
    "PaVar",
    "CspInstance",
    "PaSolution",
    "ChainResult",
    "RuleOutReport",
    "StConstraintRow",
    "parse_table",
    "serialize_table",
    "parse_cyc",
    "render_cyc",
    "root_trace",
    "candidate_orders",
    "classify_rational",
    "hertweck_zero",
    "mu_form",
    "variable_layout",
    "chain_solve",
    "propagate",
    "solve",
    "find_st_combinations",
    "is_st_constant",
    "rule_out_order",
    "st_row",
]

__version__ = "0.1.0"
