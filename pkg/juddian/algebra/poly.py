"""Univariate polynomials over any commutative coefficient ring.

Coefficients may themselves be polynomials in another variable, which
gives the nested rings Q[g][E][z] used while building operators. The
nesting is kept canonical by a fixed variable ranking: z > E > mu > any
sweep parameter. When two polynomials in different variables meet, the
one with the lower rank is a constant of the other.

Ring arithmetic is done in place on the dense coefficient lists, which
may hold Approx values in numeric mode. Division, gcd, square-free parts
and contents go through sympy.Poly over QQ or a quadratic field
Q(sqrt(r)), and need exact coefficients.
"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

from fractions import Fraction
from numbers import Rational

import sympy
from sympy import QQ
from sympy.polys.polyerrors import ExactQuotientFailed, PolynomialError

from juddian.util import AlgebraError
from juddian.algebra.scalars import (
    QuadScalar,
    from_qq,
    is_zero,
    quadratic_field,
    to_qq,
)

# -- Variable ranking. Unlisted names are sweep parameters
VAR_RANK = {"z": 40, "x": 40, "E": 30, "mu": 20}


def rank(var):
    """Nesting rank of a variable name"""
    return VAR_RANK.get(var, 10)


def _canon(value):
    if isinstance(value, bool):
        raise AlgebraError(f"invalid coefficient {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, UniPoly) and value.degree <= 0:
        return value.constant
    return value


class UniPoly:
    """Dense polynomial, coefficients lowest degree first.
    The zero polynomial has no coefficients"""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="z"):
        coeffs = [_canon(c) for c in coeffs]
        while coeffs and is_zero(coeffs[-1]):
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.var = var

    # -- Constructors
    @classmethod
    def variable(cls, var):
        """The polynomial t in the variable var"""
        return cls((0, 1), var)

    @classmethod
    def monomial(cls, k, coef=1, var="z"):
        """coef * var^k"""
        return cls([0] * k + [coef], var)

    # -- Properties
    @property
    def degree(self):
        """-1 for the zero polynomial"""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        """Leading coefficient"""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def constant(self):
        """Coefficient of degree 0"""
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def is_zero(self):
        """True for the zero polynomial"""
        return not self.coeffs

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    # -- Coercion
    def _lift(self, other):
        """other as a polynomial in self.var, or None when other outranks"""

        if isinstance(other, UniPoly):
            if other.var == self.var:
                return other
            if rank(other.var) > rank(self.var):
                return None
            return UniPoly((other,), self.var)
        if getattr(other, "OUTRANKS_POLY", False):
            if rank(other.var) >= rank(self.var):
                return None
        return UniPoly((other,), self.var)

    # -- Arithmetic
    def __add__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            if isinstance(other, UniPoly):
                return other.__radd__(self)
            return NotImplemented
        size = max(len(self.coeffs), len(lifted.coeffs))
        return UniPoly(
            [self[k] + lifted[k] for k in range(size)], self.var
        )

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __pos__(self):
        return self

    def __sub__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            if isinstance(other, UniPoly):
                return other.__rsub__(self)
            return NotImplemented
        size = max(len(self.coeffs), len(lifted.coeffs))
        return UniPoly(
            [self[k] - lifted[k] for k in range(size)], self.var
        )

    def __rsub__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted - self

    def __mul__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            if isinstance(other, UniPoly):
                return other.__rmul__(self)
            return NotImplemented
        if lifted.degree < 0 or self.degree < 0:
            return UniPoly((), self.var)
        if lifted.degree == 0:
            factor = lifted.coeffs[0]
            return UniPoly([c * factor for c in self.coeffs], self.var)
        if self.degree == 0:
            factor = self.coeffs[0]
            return UniPoly([factor * c for c in lifted.coeffs], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(lifted.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if is_zero(a):
                continue
            for j, b in enumerate(lifted.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.var)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = UniPoly((1,), self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __truediv__(self, other):
        """Exact division: by a scalar of the coefficient ring, or by a
        polynomial that divides self"""

        lifted = self._lift(other)
        if lifted is None:
            if isinstance(other, UniPoly):
                return UniPoly((self,), other.var).exquo(other)
            return NotImplemented
        if lifted.degree < 0:
            raise AlgebraError("division by the zero polynomial")
        if lifted.degree == 0:
            factor = lifted.coeffs[0]
            return UniPoly([c / factor for c in self.coeffs], self.var)
        return self.exquo(lifted)

    def __rtruediv__(self, other):
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted / self

    def _divisor(self, divisor):
        lifted = self._lift(divisor)
        if lifted is None or lifted.is_zero():
            raise AlgebraError("division by the zero polynomial")
        return lifted

    def divrem(self, divisor):
        """(q, r) with self = q*divisor + r and deg r < deg divisor"""

        divisor = self._divisor(divisor)
        ring = SympyRing.of(self, divisor)
        quo, rem = ring.to_sympy(self).div(ring.to_sympy(divisor))
        return ring.from_sympy(quo), ring.from_sympy(rem)

    def __mod__(self, other):
        return self.divrem(other)[1]

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def exquo(self, divisor):
        """Quotient of an exact division, AlgebraError otherwise"""

        divisor = self._divisor(divisor)
        ring = SympyRing.of(self, divisor)
        try:
            quo = ring.to_sympy(self).exquo(ring.to_sympy(divisor))
        except ExactQuotientFailed as exc:
            raise AlgebraError(
                f"inexact division of {self} by {divisor}"
            ) from exc
        return ring.from_sympy(quo)

    # -- Comparison
    def __eq__(self, other):
        if isinstance(other, UniPoly):
            if other.var == self.var:
                return self.coeffs == other.coeffs
            if self.degree <= 0 and other.degree <= 0:
                return self.constant == other.constant
            return False
        if self.degree > 0:
            return False
        try:
            return self.constant == other
        except TypeError:
            return False

    def __hash__(self):
        if self.degree <= 0:
            return hash(self.constant)
        return hash((self.var, self.coeffs))

    # -- Calculus and evaluation
    def derivative(self):
        """d/dvar"""
        return UniPoly(
            [k * c for k, c in enumerate(self.coeffs)][1:], self.var
        )

    def evaluate(self, value):
        """Horner evaluation at any value the coefficients can meet"""

        if not self.coeffs:
            return Fraction(0)
        acc = self.coeffs[-1]
        for coef in reversed(self.coeffs[:-1]):
            acc = acc * value + coef
        return acc

    __call__ = evaluate

    def rescale(self, factor):
        """p(factor * t)"""

        power = Fraction(1)
        out = []
        for coef in self.coeffs:
            out.append(coef * power)
            power = power * factor
        return UniPoly(out, self.var)

    def shift(self, offset):
        """p(t + offset)"""

        return self.evaluate(UniPoly((offset, 1), self.var))

    def map_coeffs(self, func):
        """Apply func to every coefficient"""
        return UniPoly([func(c) for c in self.coeffs], self.var)

    # -- Field-coefficient algorithms
    def monic(self):
        """Divide by the leading coefficient"""

        if self.is_zero():
            return self
        return self / self.lc

    def gcd(self, other):
        """Monic greatest common divisor"""

        lifted = self._lift(other)
        if lifted is None:
            raise AlgebraError(f"gcd of {self} with {other}")
        ring = SympyRing.of(self, lifted)
        common = ring.to_sympy(self).gcd(ring.to_sympy(lifted))
        if not common.is_zero:
            common = common.monic()
        return ring.from_sympy(common)

    def squarefree(self):
        """Product of the distinct irreducible factors, made monic"""

        if self.degree <= 0:
            return self
        ring = SympyRing.of(self)
        return ring.from_sympy(ring.to_sympy(self).sqf_part().monic())

    def primitive(self):
        """Integer-valued coefficients with unit content, obtained by a
        positive scaling (rational coefficients only)"""

        if self.is_zero():
            return self
        if not self.is_rational():
            raise AlgebraError(f"content of a non-rational polynomial {self}")
        ring = SympyRing.of(self)
        _, prim = ring.to_sympy(self).primitive()
        return ring.from_sympy(prim)

    def is_rational(self):
        """All coefficients are rational numbers"""
        return all(isinstance(c, Fraction) for c in self.coeffs)

    # -- Output
    def to_str(self):
        """Human readable form, highest degree first"""

        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            coef = self.coeffs[k]
            if is_zero(coef):
                continue
            text = format_scalar(coef)
            if k == 0:
                parts.append(text)
                continue
            mono = self.var if k == 1 else f"{self.var}^{k}"
            if text == "1":
                parts.append(mono)
            elif text == "-1":
                parts.append(f"-{mono}")
            else:
                parts.append(f"{text}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    def __repr__(self):
        return self.to_str()


def format_scalar(value):
    """Compact text for any coefficient"""

    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, UniPoly):
        return f"({value.to_str()})"
    return repr(value)


# ----------------------------------------
# -- Helpers on nested polynomials
# ----------------------------------------


def degree_in(value, var):
    """Degree of a (nested) polynomial in the given variable"""

    if not isinstance(value, UniPoly):
        return 0 if not is_zero(value) else -1
    if value.var == var:
        return value.degree
    if rank(value.var) < rank(var):
        return 0 if not value.is_zero() else -1
    return max((degree_in(c, var) for c in value.coeffs), default=-1)


def coefficient_in(value, var, k):
    """Coefficient of var^k in a (nested) polynomial"""

    if not isinstance(value, UniPoly):
        return value if k == 0 else Fraction(0)
    if value.var == var:
        return value[k]
    if rank(value.var) < rank(var):
        return value if k == 0 else Fraction(0)
    return _canon(
        UniPoly(
            [coefficient_in(c, var, k) for c in value.coeffs], value.var
        )
    )


def substitute(value, var, point):
    """Replace a variable by a value anywhere in a nested polynomial"""

    if not isinstance(value, UniPoly):
        return value
    if rank(value.var) < rank(var):
        return value
    coeffs = [substitute(c, var, point) for c in value.coeffs]
    if value.var == var:
        return _canon(UniPoly(coeffs, var).evaluate(point))
    return _canon(UniPoly(coeffs, value.var))


def leading_rational(value):
    """Leading rational coefficient of a nested polynomial"""

    while isinstance(value, UniPoly):
        value = value.lc
    return value


# ----------------------------------------
# -- Bridge to sympy
# ----------------------------------------


def _leaves(value):
    if isinstance(value, UniPoly):
        for coef in value.coeffs:
            yield from _leaves(coef)
    else:
        yield value


def _variables(value):
    if not isinstance(value, UniPoly):
        return set()
    names = {value.var}
    for coef in value.coeffs:
        names |= _variables(coef)
    return names


def _nest(terms, names):
    """Nested UniPoly from {exponents: scalar}, outer variable first"""

    if not names:
        return terms.get((), Fraction(0))
    groups = {}
    for exps, coef in terms.items():
        groups.setdefault(exps[0], {})[exps[1:]] = coef
    size = max(groups, default=-1) + 1
    return _canon(
        UniPoly(
            [_nest(groups.get(k, {}), names[1:]) for k in range(size)],
            names[0],
        )
    )


class SympyRing:
    """The sympy polynomial ring K[x1, .., xk] holding a family of nested
    polynomials, generators ordered by rank. K is QQ, or Q(sqrt(base))
    when a QuadScalar occurs"""

    def __init__(self, names, base=None):
        self.names = tuple(names)
        self.base = base
        self.domain = quadratic_field(base) if base is not None else QQ
        self.gens = tuple(sympy.Symbol(name) for name in self.names)

    @classmethod
    def of(cls, *values):
        """Smallest ring holding every value. Inexact coefficients are an
        AlgebraError"""

        bases = set()
        for value in values:
            for leaf in _leaves(value):
                if isinstance(leaf, QuadScalar):
                    bases.add(leaf.base)
                elif not isinstance(leaf, Rational) or isinstance(
                    leaf, bool
                ):
                    raise AlgebraError(
                        f"exact algebra on the inexact value {leaf!r}"
                    )
        if len(bases) > 1:
            raise AlgebraError(
                f"mixing quadratic extensions {sorted(bases)}"
            )
        names = set().union(*(_variables(v) for v in values))
        order = sorted(names, key=lambda name: (-rank(name), name))
        return cls(order, bases.pop() if bases else None)

    # -- Scalars
    def to_ground(self, value):
        """Scalar as an element of K"""

        if isinstance(value, QuadScalar):
            return value.elem
        return self.domain.convert_from(to_qq(value), QQ)

    def from_ground(self, elem):
        """Element of K as a Fraction or a QuadScalar"""

        if self.base is None:
            return from_qq(elem)
        return QuadScalar.wrap(elem, self.base)

    # -- Polynomials
    def _collect(self, value, exps, terms):
        if isinstance(value, UniPoly):
            index = self.names.index(value.var)
            for k, coef in enumerate(value.coeffs):
                shifted = list(exps)
                shifted[index] += k
                self._collect(coef, shifted, terms)
        elif not is_zero(value):
            key = tuple(exps)
            terms[key] = terms.get(key, self.domain.zero) + self.to_ground(
                value
            )

    def to_sympy(self, value):
        """sympy.Poly of a nested polynomial or a scalar"""

        terms = {}
        self._collect(value, [0] * len(self.names), terms)
        try:
            return sympy.Poly.from_dict(
                terms, *self.gens, domain=self.domain
            )
        except PolynomialError as exc:
            raise AlgebraError(f"cannot convert {value!r}: {exc}") from exc

    def from_sympy(self, poly):
        """Nested UniPoly in the first generator"""

        terms = {
            monom: self.from_ground(coef)
            for monom, coef in poly.as_dict(native=True).items()
        }
        value = _nest(terms, self.names)
        if isinstance(value, UniPoly) and value.var == self.names[0]:
            return value
        return UniPoly((value,), self.names[0])
