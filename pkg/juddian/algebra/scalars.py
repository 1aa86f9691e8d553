"""Scalars: rationals, one quadratic extension Q(theta) and the numeric
Approx type used in numeric mode"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import sympy
from sympy import QQ

from juddian.util import AlgebraError

# -- Relative precision of a double
EPS = 2.0**-52


def to_qq(value):
    """Fraction (or int) as an element of the sympy domain QQ"""

    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value):
    """Element of QQ (or a sympy Rational) as a Fraction"""

    if isinstance(value, sympy.Basic):
        return Fraction(int(value.p), int(value.q))
    return Fraction(int(value.numerator), int(value.denominator))


@lru_cache(maxsize=None)
def quadratic_field(base):
    """Q(sqrt(base)) for a squarefree integer base"""
    return QQ.algebraic_field(sympy.sqrt(base))


def split_radical(radicand):
    """(c, base) with sqrt(radicand) = c sqrt(base) and base squarefree.
    base is 1 for a rational root"""

    radicand = Fraction(radicand)
    root = sympy.sqrt(
        sympy.Rational(radicand.numerator, radicand.denominator)
    )
    coeff, rest = root.as_coeff_Mul()
    return from_qq(coeff), int(rest**2)


class QuadScalar:
    """Element a + b*theta of Q(theta), theta = sqrt(base), held as an
    element of the sympy algebraic field. Results that are rational come
    back as Fraction"""

    __slots__ = ("elem", "base")

    def __init__(self, elem, base):
        self.elem = elem
        self.base = base

    @property
    def field(self):
        """The sympy domain Q(sqrt(base))"""
        return quadratic_field(self.base)

    @classmethod
    def wrap(cls, elem, base):
        """Canonical form of a field element: Fraction when rational"""

        if elem.is_ground:
            return from_qq(elem.LC()) if elem else Fraction(0)
        return cls(elem, base)

    @classmethod
    def make(cls, a, b, radicand):
        """a + b sqrt(radicand)"""

        coeff, base = split_radical(radicand)
        if b == 0 or base == 1:
            return Fraction(a) + Fraction(b) * coeff
        field = quadratic_field(base)
        elem = field([to_qq(Fraction(b) * coeff), to_qq(a)])
        return cls.wrap(elem, base)

    @classmethod
    def sqrt(cls, radicand):
        """theta = sqrt(radicand), rational when possible"""

        return cls.make(0, 1, radicand)

    # -- Parts
    def _parts(self):
        coeffs = [from_qq(c) for c in self.elem.to_list()]
        return ([Fraction(0)] * (2 - len(coeffs)) + coeffs)[::-1]

    @property
    def a(self):
        """Rational part"""
        return self._parts()[0]

    @property
    def b(self):
        """Coefficient of sqrt(base)"""
        return self._parts()[1]

    @property
    def radicand(self):
        """theta^2"""
        return Fraction(self.base)

    # -- Coercion
    def _coerce(self, other):
        if isinstance(other, QuadScalar):
            if other.base != self.base:
                raise AlgebraError(
                    "mixing quadratic extensions "
                    f"sqrt({self.base}) and sqrt({other.base})"
                )
            return other.elem
        if isinstance(other, (int, Rational)) and not isinstance(
            other, bool
        ):
            return self.field([to_qq(other)])
        return None

    def _wrap(self, elem):
        return QuadScalar.wrap(elem, self.base)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._wrap(self.elem + other)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self.elem, self.base)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._wrap(self.elem - other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._wrap(other - self.elem)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._wrap(self.elem * other)

    __rmul__ = __mul__

    def inverse(self):
        """1 / self in the field"""
        return self._wrap(self.elem**-1)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("QuadScalar division by zero")
        return self._wrap(self.elem / other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._wrap(other / self.elem)

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        return self._wrap(self.elem**exponent)

    def __eq__(self, other):
        if isinstance(other, float):
            return NotImplemented
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.elem == other

    def __hash__(self):
        return hash((self.a, self.b, self.base))

    def to_sympy(self):
        """The value as a sympy expression"""
        return self.field.to_sympy(self.elem)

    def sign(self):
        """Exact sign for a real extension"""

        if self.base < 0:
            raise AlgebraError("no ordering on a complex extension")
        return int(sympy.sign(self.to_sympy()))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __float__(self):
        if self.base < 0:
            raise TypeError("complex QuadScalar has no float value")
        return float(self.a) + float(self.b) * math.sqrt(self.base)

    def __complex__(self):
        if self.base < 0:
            return complex(
                float(self.a), float(self.b) * math.sqrt(-self.base)
            )
        return complex(float(self))

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __repr__(self):
        return f"({self.a} + {self.b}*sqrt({self.base}))"


class Approx:
    """Double with a running absolute error bound.
    A value is ambiguous when the bound reaches its magnitude"""

    __slots__ = ("value", "err")

    def __init__(self, value, err=None):
        self.value = float(value)
        self.err = abs(self.value) * EPS if err is None else float(err)

    @staticmethod
    def _wrap(other):
        if isinstance(other, Approx):
            return other
        if isinstance(other, (int, float, Rational)):
            return Approx(other)
        if isinstance(other, QuadScalar):
            return Approx(float(other))
        return None

    def __add__(self, other):
        other = Approx._wrap(other)
        if other is None:
            return NotImplemented
        value = self.value + other.value
        return Approx(value, self.err + other.err + abs(value) * EPS)

    __radd__ = __add__

    def __neg__(self):
        return Approx(-self.value, self.err)

    def __sub__(self, other):
        other = Approx._wrap(other)
        if other is None:
            return NotImplemented
        value = self.value - other.value
        return Approx(value, self.err + other.err + abs(value) * EPS)

    def __rsub__(self, other):
        other = Approx._wrap(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = Approx._wrap(other)
        if other is None:
            return NotImplemented
        value = self.value * other.value
        err = (
            abs(self.value) * other.err
            + abs(other.value) * self.err
            + self.err * other.err
            + abs(value) * EPS
        )
        return Approx(value, err)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = Approx._wrap(other)
        if other is None:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError("Approx division by zero")
        value = self.value / other.value
        denom = abs(other.value)
        err = (self.err + abs(value) * other.err) / denom
        if other.err >= denom:
            err = math.inf
        return Approx(value, err + abs(value) * EPS)

    def __rtruediv__(self, other):
        other = Approx._wrap(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Approx(1.0, 0.0)
        for _ in range(exponent):
            result = result * self
        return result

    def sqrt(self):
        """Square root with first order error propagation"""

        if self.value < 0:
            raise AlgebraError(f"square root of negative value {self.value}")
        root = math.sqrt(self.value)
        err = self.err / (2 * root) if root else math.sqrt(self.err)
        return Approx(root, err + root * EPS)

    @property
    def ambiguous(self):
        """The sign of the value is not certain"""
        return abs(self.value) <= self.err

    def __eq__(self, other):
        other = Approx._wrap(other)
        if other is None:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self.value < float(other)

    def __gt__(self, other):
        return self.value > float(other)

    def __float__(self):
        return self.value

    def __complex__(self):
        return complex(self.value)

    def __abs__(self):
        return Approx(abs(self.value), self.err)

    def __repr__(self):
        return f"Approx({self.value!r}, err={self.err:.3g})"


# ----------------------------------------
# -- Helpers working on any scalar
# ----------------------------------------


def is_zero(value):
    """Syntactic zero test on canonical forms. Approx values whose error
    bound covers zero count as zero"""

    if isinstance(value, Approx):
        return value.value == 0.0 or value.ambiguous
    if hasattr(value, "is_zero"):
        return value.is_zero()
    return value == 0


def is_exact(value):
    """True for rationals and quadratic-extension elements"""

    return isinstance(value, (int, Rational, QuadScalar))


def sqrt_of(value):
    """Square root in the ring of the argument"""

    if isinstance(value, Approx):
        return value.sqrt()
    if isinstance(value, float):
        return math.sqrt(value)
    return QuadScalar.sqrt(Fraction(value))


def to_float(value):
    """Double approximation of a scalar"""

    return float(value)


def sign_of(value):
    """Exact sign where possible"""

    if isinstance(value, QuadScalar):
        return value.sign()
    value = float(value) if isinstance(value, Approx) else value
    return (value > 0) - (value < 0)
