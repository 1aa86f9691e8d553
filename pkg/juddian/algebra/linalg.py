"""Linear algebra: exact over QQ or Q(sqrt(r)) with sympy's DomainMatrix,
least squares in numpy when an entry is inexact"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

from fractions import Fraction

import numpy as np
from sympy.polys.matrices import DomainMatrix

from juddian.util import AlgebraError
from juddian.algebra.poly import SympyRing, UniPoly
from juddian.algebra.scalars import Approx, is_exact

# -- Relative residual above which a numeric system is inconsistent
NUMERIC_TOL = 1e-9


def _exact(matrix):
    for row in matrix:
        for value in row:
            if isinstance(value, UniPoly):
                raise AlgebraError("linear algebra needs scalar entries")
    return all(is_exact(v) for row in matrix for v in row)


def _domain_matrix(matrix, ncols):
    ring = SympyRing.of(*(v for row in matrix for v in row))
    rows = [[ring.to_ground(v) for v in row] for row in matrix]
    return ring, DomainMatrix(rows, (len(rows), ncols), ring.domain)


def row_reduce(matrix):
    """Reduced row echelon form and the pivot columns"""

    if not matrix:
        return [], []
    ring, dm = _domain_matrix(matrix, len(matrix[0]))
    reduced, pivots = dm.rref()
    rows = [[ring.from_ground(v) for v in row] for row in reduced.to_list()]
    return rows, list(pivots)


def solve(matrix, rhs):
    """One solution of matrix * x = rhs (free unknowns set to zero), or
    None when the system is inconsistent"""

    ncols = len(matrix[0]) if matrix else 0
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    if not _exact(augmented):
        return _numeric_solve(matrix, rhs)
    rows, pivots = row_reduce(augmented)
    if ncols in pivots:
        return None
    solution = [Fraction(0)] * ncols
    for row, col in zip(rows, pivots):
        solution[col] = row[-1]
    return solution


def nullspace(matrix, ncols=None):
    """Basis of the kernel, one vector per free column with a one in that
    column"""

    ncols = ncols if ncols is not None else len(matrix[0])
    if not matrix:
        return [
            [Fraction(int(i == free)) for i in range(ncols)]
            for free in range(ncols)
        ]
    if not _exact(matrix):
        return _numeric_nullspace(matrix, ncols)
    ring, dm = _domain_matrix(matrix, ncols)
    reduced, pivots = dm.rref()
    basis = reduced.nullspace_from_rref(pivots)
    return [[ring.from_ground(v) for v in row] for row in basis.to_list()]


# ----------------------------------------
# -- Numeric mode
# ----------------------------------------


def _array(matrix):
    return np.array([[float(v) for v in row] for row in matrix], dtype=float)


def _numeric_solve(matrix, rhs):
    lhs, rhs = _array(matrix), np.array([float(v) for v in rhs])
    values, *_ = np.linalg.lstsq(lhs, rhs, rcond=None)
    scale = max(1.0, float(np.max(np.abs(rhs), initial=0.0)))
    residual = float(np.max(np.abs(lhs @ values - rhs), initial=0.0))
    if residual > NUMERIC_TOL * scale:
        return None
    return [Approx(v) for v in values]


def _numeric_nullspace(matrix, ncols):
    _, singular, vh = np.linalg.svd(_array(matrix))
    top = float(singular[0]) if singular.size else 0.0
    rank = int(np.sum(singular > NUMERIC_TOL * max(1.0, top)))
    return [[Approx(v) for v in row] for row in vh[rank:ncols]]
