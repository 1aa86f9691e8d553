"""Linear differential operators with polynomial coefficients and their
gradation slicing.

A term coef * z^m * D^l has grade m - l: it maps z^k to a multiple of
z^(k + m - l). Grouping the terms by grade gives slices whose action on
monomials is a single scalar, the induced multiplicator F_g(k).
"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from juddian.util import AlgebraError
from juddian.algebra.poly import UniPoly, format_scalar, substitute
from juddian.algebra.scalars import is_zero


@dataclass(frozen=True)
class OdeTerm:
    """coef * z^m * D^l"""

    coef: object
    m: int
    l: int  # noqa: E741

    @property
    def grade(self):
        """Change of monomial degree under the action of the term"""
        return self.m - self.l


class OdeOperator:
    """Finite sum of terms. Terms sharing (m, l) are merged and zero
    coefficients dropped"""

    def __init__(self, terms=(), meta=None):
        coeffs = {}
        for term in terms:
            if not isinstance(term, OdeTerm):
                term = OdeTerm(*term)
            if term.m < 0 or term.l < 0:
                raise AlgebraError(f"negative power in term {term}")
            key = (term.m, term.l)
            coeffs[key] = coeffs.get(key, Fraction(0)) + term.coef
        self.coeffs = {k: c for k, c in coeffs.items() if not is_zero(c)}
        self.meta = dict(meta or {})

    @classmethod
    def from_polynomials(cls, polys, meta=None):
        """Operator sum X_l(z) D^l from the list [X_0, X_1, ...]"""

        terms = []
        for order, poly in enumerate(polys):
            if not isinstance(poly, UniPoly):
                poly = UniPoly((poly,), "z")
            for power, coef in enumerate(poly.coeffs):
                terms.append(OdeTerm(coef, power, order))
        return cls(terms, meta)

    # -- Access
    @property
    def terms(self):
        """Terms in canonical (grade, l) order"""
        return sorted(
            (OdeTerm(c, m, l) for (m, l), c in self.coeffs.items()),
            key=lambda t: (t.grade, t.l),
        )

    @property
    def order(self):
        """Highest derivative order"""
        return max((l for _, l in self.coeffs), default=0)

    def coefficient(self, m, l):  # noqa: E741
        """Coefficient of z^m D^l"""
        return self.coeffs.get((m, l), Fraction(0))

    def polynomial(self, order):
        """Coefficient polynomial X_order(z)"""

        size = max((m for m, l in self.coeffs if l == order), default=-1)
        return UniPoly(
            [self.coefficient(m, order) for m in range(size + 1)], "z"
        )

    def coefficient_polynomials(self):
        """[X_0, X_1, ..., X_N]"""
        return [self.polynomial(order) for order in range(self.order + 1)]

    def second_order_part(self):
        """(A, B, C) with A = X_2, B = X_1, C = X_0"""
        return self.polynomial(2), self.polynomial(1), self.polynomial(0)

    # -- Transformations
    def map_coefficients(self, func):
        """New operator with func applied to every coefficient"""
        return OdeOperator(
            [(func(c), m, l) for (m, l), c in self.coeffs.items()],
            self.meta,
        )

    def substitute(self, var, value):
        """Fix a parameter (or the energy) to a value"""
        return self.map_coefficients(lambda c: substitute(c, var, value))

    def multiply(self, factor):
        """factor * L"""
        return self.map_coefficients(lambda c: c * factor)

    def mul_poly(self, poly):
        """p(z) * L"""

        terms = []
        for (m, l), coef in self.coeffs.items():
            for power, value in enumerate(poly.coeffs):
                terms.append((value * coef, m + power, l))
        return OdeOperator(terms, self.meta)

    def rescale(self, factor):
        """Operator in the coordinate x with z = factor * x.
        A term of grade k picks up factor^k"""

        return OdeOperator(
            [
                (c * _power(factor, m - l), m, l)
                for (m, l), c in self.coeffs.items()
            ],
            self.meta,
        )

    def reflect(self):
        """Operator in the coordinate x = -z"""
        return self.rescale(Fraction(-1))

    def translate(self, offset):
        """Operator in the coordinate x with z = x + offset"""

        polys = [p.shift(offset) for p in self.coefficient_polynomials()]
        meta = dict(self.meta)
        meta["origin"] = meta.get("origin", 0) + offset
        return OdeOperator.from_polynomials(polys, meta)

    def __add__(self, other):
        return OdeOperator(
            [
                (c, m, l)
                for op in (self, other)
                for (m, l), c in op.coeffs.items()
            ],
            self.meta,
        )

    def __eq__(self, other):
        if not isinstance(other, OdeOperator):
            return NotImplemented
        if set(self.coeffs) != set(other.coeffs):
            return False
        return all(self.coeffs[k] == other.coeffs[k] for k in self.coeffs)

    __hash__ = None

    def __repr__(self):
        return f"OdeOperator({len(self.coeffs)} terms, order {self.order})"

    # -- Text form
    def dump(self):
        """One term per line, `coef * z^m * D^l`"""
        return "\n".join(
            f"{format_scalar(t.coef)} * z^{t.m} * D^{t.l}" for t in self.terms
        )

    @classmethod
    def parse(cls, text):
        """Read the text form back (rational coefficients only)"""

        terms = []
        for line in text.splitlines():
            if not line.strip():
                continue
            match = _TERM_RE.match(line)
            if not match:
                raise AlgebraError(f"not an operator term: '{line}'")
            coef = match.group(1).strip()
            if coef.startswith("(") and coef.endswith(")"):
                coef = coef[1:-1]
            terms.append(
                (Fraction(coef), int(match.group(2)), int(match.group(3)))
            )
        return cls(terms)


_TERM_RE = re.compile(r"^\s*(.+?)\s*\*\s*z\^(\d+)\s*\*\s*D\^(\d+)\s*$")


def _power(base, exponent):
    if exponent >= 0:
        return base**exponent
    return Fraction(1) / base ** (-exponent)


@dataclass(frozen=True)
class GradeSignature:
    """Highest grade, lowest grade and width of a gradation slicing"""

    gamma: int
    gamma_star: int
    width: int

    def __post_init__(self):
        if self.gamma < self.gamma_star:
            raise AlgebraError("highest grade below the lowest grade")
        if self.width != self.gamma - self.gamma_star + 1:
            raise AlgebraError("width must be gamma - gamma_star + 1")

    def as_tuple(self):
        """(gamma, gamma_star, width)"""
        return (self.gamma, self.gamma_star, self.width)


@dataclass(frozen=True)
class Slice:
    """All the terms of one grade"""

    grade: int
    terms: tuple

    def multiplicator(self, k):
        """F_g(k)"""
        return induced_multiplicator(self, k)


class Alternative(Enum):
    """Degree pattern of the second-order part"""

    A1 = "A1"
    A2 = "A2"
    OTHER = "other"


def slice_operator(op):
    """Grade signature and one slice per grade, highest grade first.
    Grades between the extremes without terms give empty slices"""

    if not op.coeffs:
        raise AlgebraError("cannot slice the empty operator")

    grades = {}
    for term in op.terms:
        grades.setdefault(term.grade, []).append(term)

    gamma, gamma_star = max(grades), min(grades)
    signature = GradeSignature(gamma, gamma_star, gamma - gamma_star + 1)
    slices = [
        Slice(grade, tuple(grades.get(grade, ())))
        for grade in range(gamma, gamma_star - 1, -1)
    ]
    return signature, slices


def induced_multiplicator(slice_, k):
    """F_g(k) with slice applied to z^k equal to F_g(k) z^(k+g)"""

    if k < 0:
        raise AlgebraError(f"negative monomial degree {k}")
    total = Fraction(0)
    for term in slice_.terms:
        falling = math.perm(k, term.l)
        if falling:
            total = total + term.coef * falling
    return total


def normalize_lowest_grade(op):
    """Divide by z^gamma_star when gamma_star > 0, so that the lowest grade
    becomes 0. The removed power is kept in the metadata"""

    signature, _ = slice_operator(op)
    shift = signature.gamma_star
    if shift <= 0:
        return op
    meta = dict(op.meta)
    meta["factored_power"] = meta.get("factored_power", 0) + shift
    return OdeOperator(
        [(c, m - shift, l) for (m, l), c in op.coeffs.items()], meta
    )


def _degree(poly):
    return poly.degree if not poly.is_zero() else -math.inf


def classify_alternative(op):
    """A1: deg B <= deg A - 1 and deg C <= deg A - 2, one with equality.
    A2: deg B >= deg A and deg C = deg B - 1.
    Higher order operators are classified by their second-order part"""

    if op.order < 2:
        return Alternative.OTHER
    poly_a, poly_b, poly_c = (_degree(p) for p in op.second_order_part())
    if (
        poly_b <= poly_a - 1
        and poly_c <= poly_a - 2
        and (poly_b == poly_a - 1 or poly_c == poly_a - 2)
    ):
        return Alternative.A1
    if poly_b >= poly_a and poly_c == poly_b - 1:
        return Alternative.A2
    return Alternative.OTHER


def apply_operator(op, poly):
    """Image L p as a polynomial in the variable of p"""

    image = {}
    for (m, l), coef in op.coeffs.items():
        for k, value in enumerate(poly.coeffs):
            if k < l or is_zero(value):
                continue
            power = k + m - l
            term = coef * value * math.perm(k, l)
            image[power] = image.get(power, Fraction(0)) + term
    if not image:
        return UniPoly((), poly.var)
    return UniPoly(
        [image.get(i, Fraction(0)) for i in range(max(image) + 1)], poly.var
    )


def wronskian_uniqueness_flag(op):
    """True iff B = -A' exactly, the only way a second-order equation can
    carry two polynomial solutions"""

    if op.order != 2:
        return False
    poly_a, poly_b, _ = op.second_order_part()
    return poly_b == -poly_a.derivative()


def irregular_at_infinity(op):
    """Positive highest grade: the point at infinity is an irregular
    singular point"""

    signature, _ = slice_operator(op)
    return signature.gamma > 0
