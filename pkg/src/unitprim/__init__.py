"""Exact computations for the b(n, m) table of unit-primitive matrices."""

from .bseq import BTable, b_by_dp, b_by_matrix, cross_check, h_numerator, k_grid, load_table1
from .charpoly import f_contfrac, f_rational, q_by_determinant, q_by_recurrence, r_by_bordered, r_from_q
from .exactcore import IntPoly, RatFunc, series_expand
from .kernels import backend
from .matrixops import Matrix, build_unit_primitive, unit_primitive_inverse

__version__ = "0.1.0"

__all__ = [
    "BTable",
    "IntPoly",
    "Matrix",
    "RatFunc",
    "b_by_dp",
    "b_by_matrix",
    "backend",
    "build_unit_primitive",
    "cross_check",
    "f_contfrac",
    "f_rational",
    "h_numerator",
    "k_grid",
    "load_table1",
    "q_by_determinant",
    "q_by_recurrence",
    "r_by_bordered",
    "r_from_q",
    "series_expand",
    "unit_primitive_inverse",
]
