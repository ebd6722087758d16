"""Exact linear algebra over the valuation ring R and over the integers."""

from .integer import IntegerSNF, integer_rank_and_torsion, integer_snf
from .reduction import ReductionResult, column_rank, kernel_basis, reduce_columns
from .snf import SNFResult, smith_normal_form, snf_exponents, solve_membership
from .sparse import SparseMatrix

__all__ = [
    "SparseMatrix", "ReductionResult", "reduce_columns", "kernel_basis", "column_rank",
    "SNFResult", "smith_normal_form", "snf_exponents", "solve_membership",
    "IntegerSNF", "integer_snf", "integer_rank_and_torsion",
]
