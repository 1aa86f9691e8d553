"""Real root isolation and refinement with sympy, and numeric roots from
the companion matrix"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np
import sympy
from sympy.polys.polyerrors import RefinementFailed

from juddian.util import AlgebraError
from juddian.algebra.poly import SympyRing
from juddian.algebra.scalars import from_qq


@dataclass(frozen=True)
class Interval:
    """Search domain. A missing bound leaves that side unbounded"""

    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    lo_closed: bool = True
    hi_closed: bool = True

    @classmethod
    def half_open(cls, lo, hi):
        """(lo, hi], the convention of sweep domains"""
        return cls(Fraction(lo), Fraction(hi), False, True)

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and self.lo >= self.hi:
            raise AlgebraError(f"empty interval [{self.lo}, {self.hi}]")

    def contains(self, value):
        """Membership test honouring open ends"""

        if self.lo is not None:
            if value < self.lo or (value == self.lo and not self.lo_closed):
                return False
        if self.hi is not None:
            if value > self.hi or (value == self.hi and not self.hi_closed):
                return False
        return True


@dataclass(frozen=True)
class RootInterval:
    """[lo, hi] holding exactly one simple root"""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def exact(self):
        """The root is known exactly"""
        return self.lo == self.hi

    @property
    def midpoint(self):
        """Center of the interval"""
        return (self.lo + self.hi) / 2

    @property
    def width(self):
        """hi - lo"""
        return self.hi - self.lo


def _rational(value):
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _rational_poly(poly):
    """sympy.Poly over QQ, for root isolation"""

    if poly.is_zero():
        raise AlgebraError("root isolation of the zero polynomial")
    if not poly.is_rational():
        raise AlgebraError("root isolation needs rational coefficients")
    return SympyRing.of(poly).to_sympy(poly)


def sturm_count(poly, lo, hi):
    """Distinct real roots in (lo, hi] of a polynomial nonzero at lo"""

    if poly.degree <= 0:
        return 0
    count = _rational_poly(poly).count_roots(_rational(lo), _rational(hi))
    return count - (1 if poly.evaluate(lo) == 0 else 0)


def sturm_isolate(poly, domain=None):
    """Disjoint isolating intervals, one per real root in the domain, in
    increasing order. The input must be square-free"""

    target = _rational_poly(poly)
    if poly.degree <= 0:
        return []
    if not target.is_sqf:
        raise AlgebraError(f"polynomial is not square-free: {poly}")

    domain = domain or Interval()
    found = []

    # -- Rational roots on the bounds are split off by deflation
    for end, closed in ((domain.lo, domain.lo_closed),
                        (domain.hi, domain.hi_closed)):
        if end is None or target.degree() <= 0:
            continue
        if target.eval(_rational(end)) == 0:
            if closed:
                found.append(RootInterval(Fraction(end), Fraction(end)))
            target = target.exquo(
                sympy.Poly(target.gen - _rational(end), target.gen)
            )

    if target.degree() > 0:
        bounds = {}
        if domain.lo is not None:
            bounds["inf"] = _rational(domain.lo)
        if domain.hi is not None:
            bounds["sup"] = _rational(domain.hi)
        for (lo, hi), _ in target.intervals(**bounds):
            found.append(RootInterval(from_qq(lo), from_qq(hi)))

    return sorted(found, key=lambda iv: (iv.lo, iv.hi))


def refine_interval(poly, interval, eps):
    """Shrink an interval holding exactly one simple root below the width
    eps"""

    lo, hi = Fraction(interval.lo), Fraction(interval.hi)
    if lo == hi:
        return RootInterval(lo, hi)
    for end in (lo, hi):
        if poly.evaluate(end) == 0:
            return RootInterval(end, end)

    target = _rational_poly(poly)
    if target.count_roots(_rational(lo), _rational(hi)) != 1:
        raise AlgebraError(
            f"interval [{lo}, {hi}] does not isolate a simple root"
        )
    # -- Refinement works on one side of zero
    if lo < 0 < hi:
        if poly.evaluate(0) == 0:
            return RootInterval(Fraction(0), Fraction(0))
        if target.count_roots(_rational(lo), 0) == 1:
            hi = Fraction(0)
        else:
            lo = Fraction(0)

    try:
        lo, hi = target.refine_root(
            _rational(lo), _rational(hi), eps=_rational(eps)
        )
    except RefinementFailed as exc:
        raise AlgebraError(str(exc)) from exc
    return RootInterval(from_qq(lo), from_qq(hi))


def refine_root(poly, interval, eps):
    """Rational approximation within eps of the isolated root"""

    return refine_interval(poly, interval, eps).midpoint


# ----------------------------------------
# -- Numeric roots
# ----------------------------------------


def to_numpy(poly, dtype=complex):
    """Coefficients highest degree first, as used by numpy.polyval"""

    return np.array([dtype(c) for c in reversed(poly.coeffs)], dtype=dtype)


def companion_roots(poly, polish=3):
    """All complex roots, eigenvalues of the companion matrix polished by
    a few Newton steps, sorted by real then imaginary part"""

    if poly.degree < 0:
        raise AlgebraError("roots of the zero polynomial")
    if poly.degree == 0:
        return np.zeros(0, dtype=complex)

    coeffs = to_numpy(poly)
    roots = np.roots(coeffs).astype(complex)
    deriv = np.polyder(coeffs)
    for _ in range(polish):
        slope = np.polyval(deriv, roots)
        step = np.divide(
            np.polyval(coeffs, roots),
            slope,
            out=np.zeros_like(roots),
            where=slope != 0,
        )
        roots = roots - step

    order = np.lexsort((roots.imag, roots.real))
    return roots[order]


def real_root_count(poly, tol=1e-9):
    """Numeric count of real roots of a square-free polynomial"""

    roots = companion_roots(poly)
    scale = np.maximum(1.0, np.abs(roots))
    return int(np.sum(np.abs(roots.imag) <= tol * scale))
