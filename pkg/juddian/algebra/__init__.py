"""Exact and numeric algebra: scalars, polynomials, rational functions,
root isolation and resultants"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

from juddian.algebra.scalars import (
    Approx,
    QuadScalar,
    is_exact,
    is_zero,
    sign_of,
    sqrt_of,
)
from juddian.algebra.poly import (
    UniPoly,
    coefficient_in,
    degree_in,
    leading_rational,
    substitute,
)
from juddian.algebra.ratfunc import RatFunc
from juddian.algebra.roots import (
    Interval,
    RootInterval,
    companion_roots,
    real_root_count,
    refine_interval,
    refine_root,
    sturm_count,
    sturm_isolate,
)
from juddian.algebra.resultant import resultant


def poly_arith(a, b, op):
    """add | sub | mul | divrem on two polynomials in the same variable"""

    if a.var != b.var:
        raise ValueError(f"variable mismatch: {a.var}, {b.var}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divrem":
        return a.divrem(b)
    raise ValueError(f"unknown operation: {op}")


__all__ = [
    "Approx",
    "Interval",
    "QuadScalar",
    "RatFunc",
    "RootInterval",
    "UniPoly",
    "coefficient_in",
    "companion_roots",
    "degree_in",
    "is_exact",
    "is_zero",
    "leading_rational",
    "poly_arith",
    "real_root_count",
    "refine_interval",
    "refine_root",
    "resultant",
    "sign_of",
    "sqrt_of",
    "sturm_count",
    "sturm_isolate",
    "substitute",
]
