"""Rational functions in one variable"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

from juddian.util import AlgebraError
from juddian.algebra.poly import SympyRing, UniPoly, rank
from juddian.algebra.scalars import is_exact


def _field_coefficients(poly):
    return all(is_exact(c) for c in poly.coeffs)


def _cancel(num, den):
    """num/den in lowest terms with sympy.Poly.cancel"""

    ring = SympyRing.of(num, den)
    num, den = ring.to_sympy(num).cancel(ring.to_sympy(den), include=True)
    return ring.from_sympy(num), ring.from_sympy(den)


class RatFunc:
    """num/den with a monic denominator, reduced to lowest terms whenever
    the coefficients are exact scalars"""

    # -- Polynomials in a variable of lower or equal rank are lifted here
    OUTRANKS_POLY = True

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, var=None):
        var = var or next(
            (p.var for p in (num, den) if isinstance(p, UniPoly)), "t"
        )
        num = self._as_poly(num, var)
        den = self._as_poly(den, var)
        if den.is_zero():
            raise AlgebraError("rational function with zero denominator")

        if num.is_zero():
            den = UniPoly((1,), var)
        elif _field_coefficients(num) and _field_coefficients(den):
            if den.degree > 0:
                num, den = _cancel(num, den)
            lead = den.lc
            num, den = num / lead, den / lead

        self.num = num
        self.den = den

    @staticmethod
    def _as_poly(value, var):
        if isinstance(value, UniPoly) and value.var == var:
            return value
        return UniPoly((value,), var)

    @property
    def var(self):
        """Name of the variable"""
        return self.num.var

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.var != self.var:
                raise AlgebraError(
                    f"mixing rational functions in {self.var}, {other.var}"
                )
            return other
        if isinstance(other, UniPoly) and other.var != self.var:
            if rank(other.var) > rank(self.var):
                return None
        return RatFunc(other, 1, self.var)

    def is_zero(self):
        """True for the zero function"""
        return self.num.is_zero()

    def is_polynomial(self):
        """True when the denominator is a constant"""
        return self.den.degree == 0

    def as_poly(self):
        """The numerator over a constant denominator"""

        if not self.is_polynomial():
            raise AlgebraError(f"{self} is not a polynomial")
        return self.num / self.den.constant

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
            self.var,
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RatFunc(
            self.num * other.num, self.den * other.den, self.var
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise AlgebraError("division by the zero rational function")
        return RatFunc(
            self.num * other.den, self.den * other.num, self.var
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        return RatFunc(self.num**exponent, self.den**exponent, self.var)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (AlgebraError, TypeError):
            return False
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        if self.is_polynomial():
            return hash(self.as_poly())
        return hash((self.num, self.den))

    def evaluate(self, value):
        """Value at a point where the denominator does not vanish"""

        den = self.den.evaluate(value)
        if den == 0:
            raise AlgebraError(f"pole of {self} at {value}")
        return self.num.evaluate(value) / den

    __call__ = evaluate

    def __repr__(self):
        if self.is_polynomial():
            return repr(self.as_poly())
        return f"({self.num})/({self.den})"
