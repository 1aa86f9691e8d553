"""Resultants and Sylvester matrices"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

import numpy as np
import sympy
from sympy.polys.subresultants_qq_zz import sylvester

from juddian.util import AlgebraError
from juddian.algebra.poly import SympyRing


def _check(p, q):
    if p.is_zero() or q.is_zero():
        raise AlgebraError("resultant with the zero polynomial")
    if p.degree == 0 and q.degree == 0:
        raise AlgebraError("resultant of two constants")
    if q.var != p.var:
        raise AlgebraError(f"resultant of polynomials in {p.var}, {q.var}")


def resultant(p, q):
    """Resultant in the outer variable of p and q.

    Convention: determinant of the Sylvester matrix with the rows of p
    first, so that resultant(z - a, z - b) = a - b. The result lies in the
    coefficient ring: a scalar, or a polynomial in the remaining parameter.
    """

    _check(p, q)
    if p.degree == 0:
        return p.constant**q.degree
    if q.degree == 0:
        return q.constant**p.degree

    ring = SympyRing.of(p, q)
    res = ring.to_sympy(p).resultant(ring.to_sympy(q))
    if not isinstance(res, sympy.Poly):
        return ring.from_ground(ring.domain.from_sympy(res))
    value = SympyRing(ring.names[1:], ring.base).from_sympy(res)
    return value.constant if value.degree <= 0 else value


def numeric_sylvester(p, q):
    """Sylvester matrix in the outer variable with double entries, the
    rows of p first"""

    _check(p, q)
    var = sympy.Symbol(p.var)
    first, second = (
        sympy.Poly([float(c) for c in reversed(poly.coeffs)], var)
        for poly in (p, q)
    )
    return np.array(sylvester(first, second, var).tolist(), dtype=float)


def numeric_resultant(p, q):
    """Sylvester determinant with double entries"""

    if p.degree <= 0:
        return float(p.constant) ** q.degree
    if q.degree <= 0:
        return float(q.constant) ** p.degree
    return float(np.linalg.det(numeric_sylvester(p, q)))
