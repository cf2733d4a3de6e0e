"""Exact and probabilistic verification toolkit for trace/pfaffian invariants
of a single traceless matrix of order 3, 4 or 5 under the orthogonal and
special orthogonal groups: generator tables, graded dimension counts over
large prime fields, Hironaka decomposition checks and Poincare series."""

from __future__ import annotations

from . import catalog
from .batch import ModOps, sample_traceless_batch
from .graded import (
    EvaluationCache,
    GenPoly,
    Generator,
    GeneratorSet,
    dimension_scan,
    enumerate_monomials,
    graded_dimension,
    hironaka_check,
    is_member,
    jacobian_rank,
    joint_membership,
    minimality_report,
    repair_module_basis,
    verify_polynomial_identity,
)
from .modular import (
    DEFAULT_PRIME,
    FAST_PRIME,
    TRANSPOSE_BOUND,
    TWO_GENERIC,
    DualRing,
    EvaluationContext,
    PrimeField,
    cayley_special_orthogonal,
    rank_mod_p,
    sample_points,
)
from .series import CoefficientTable, RationalSeries, univariate
from .words import (
    InvariantExpression,
    MatrixExpression,
    Word,
    cyclic_normal_form,
    parse_invariant,
    parse_matrix_expression,
    parse_word,
    star,
)

__version__ = "0.1.0"

__all__ = [
    "catalog",
    "ModOps",
    "sample_traceless_batch",
    "EvaluationCache",
    "GenPoly",
    "Generator",
    "GeneratorSet",
    "dimension_scan",
    "enumerate_monomials",
    "graded_dimension",
    "hironaka_check",
    "is_member",
    "jacobian_rank",
    "joint_membership",
    "minimality_report",
    "repair_module_basis",
    "verify_polynomial_identity",
    "DEFAULT_PRIME",
    "FAST_PRIME",
    "TRANSPOSE_BOUND",
    "TWO_GENERIC",
    "DualRing",
    "EvaluationContext",
    "PrimeField",
    "cayley_special_orthogonal",
    "rank_mod_p",
    "sample_points",
    "CoefficientTable",
    "RationalSeries",
    "univariate",
    "InvariantExpression",
    "MatrixExpression",
    "Word",
    "cyclic_normal_form",
    "parse_invariant",
    "parse_matrix_expression",
    "parse_word",
    "star",
]
