"""Exact arithmetic: Laurent polynomials over Q, their fraction field, and matrices over it."""

from __future__ import annotations

from typing import Literal

from ..errors import DimensionError
from .gcd import laurent_normalize, poly_gcd
from .laurent import ExponentVector, LaurentPolynomial, lex_key, parse_laurent
from .matrix import FieldMatrix, mat_det, mat_inverse, mat_solve
from .ratfunc import RationalFunction, parse_rational_function, rf_make, specialize

__all__ = [
    "ExponentVector",
    "FieldMatrix",
    "LaurentPolynomial",
    "RationalFunction",
    "laurent_normalize",
    "lex_key",
    "mat_det",
    "mat_inverse",
    "mat_solve",
    "parse_laurent",
    "parse_rational_function",
    "poly_gcd",
    "poly_op",
    "rf_make",
    "specialize",
]


def poly_op(a: LaurentPolynomial, b: LaurentPolynomial, kind: Literal["add", "sub", "mul"]) -> LaurentPolynomial:
    if a.nvars != b.nvars:
        raise DimensionError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {kind!r}")
