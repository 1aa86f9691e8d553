"""Juddian points: parameter values on a baseline where every constraint
vanishes, each one packaged with its polynomial solution"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from juddian.util import AlgebraError, DegenerateBaseline, NotApplicable
from juddian.algebra.poly import UniPoly, substitute
from juddian.algebra.resultant import numeric_resultant, resultant
from juddian.algebra.roots import (
    RootInterval,
    companion_roots,
    refine_interval,
    refine_root,
    sturm_count,
    sturm_isolate,
    to_numpy,
)
from juddian.algebra.scalars import Approx, is_zero
from juddian.gradation import apply_operator
from juddian.recurrence import (
    PolynomialSolution,
    cleared_recurrence,
    constraint_polynomials,
    solve_baseline,
    symbolic_solution,
)
from juddian.models.builders import build_ode
from juddian.models.kus import KUS_MODELS, kus_value
from juddian.models.spec import ModelKind

# -- Default width of refined parameter intervals
DEFAULT_EPS = Fraction(1, 10**30)

# -- Relative size below which a recovered constraint value counts as zero
RECOVERY_TOL = 1e-12

# -- Bisection steps of numeric mode
BISECTION_STEPS = 200


@dataclass(frozen=True)
class JuddianPoint:
    """A parameter value with its solution. `certified` is set when the
    residual was shown to vanish exactly at the algebraic root"""

    param: str
    value: object
    solution: PolynomialSolution
    interval: Optional[RootInterval] = None
    certified: bool = False
    extra: dict = field(default_factory=dict)


@dataclass(frozen=True)
class PointSet:
    """Result of a point search. `excluded` holds the roots where the
    clearing factor vanishes too, `rejected` the candidates that failed
    the recovery of the second parameter"""

    points: list
    excluded: list = field(default_factory=list)
    rejected: list = field(default_factory=list)
    polynomial: object = None
    modulus: object = None


# ----------------------------------------
# -- Helpers
# ----------------------------------------


def as_univariate(value, var):
    """A constraint as a polynomial in the swept variable"""

    if isinstance(value, UniPoly):
        if value.var == var:
            return value
        raise AlgebraError(f"expected a polynomial in {var}, got {value}")
    return UniPoly((value,), var)


def _has_root(poly, interval):
    if poly.degree <= 0:
        return False
    if interval.exact:
        return poly.evaluate(interval.lo) == 0
    return sturm_count(poly, interval.lo, interval.hi) > 0


def _vanishes_modulo(value, modulus):
    if isinstance(value, UniPoly) and value.var == modulus.var:
        return (value % modulus).is_zero()
    return is_zero(value)


def _prepare(spec, n, free=None):
    op = build_ode(spec, free=free)
    baseline = solve_baseline(op, n)
    cleared = cleared_recurrence(baseline)
    return baseline, cleared, constraint_polynomials(baseline, cleared)


def _relative(poly, value):
    """|p(value)| relative to the size of its terms"""

    coeffs = [abs(complex(c)) for c in poly.coeffs]
    scale = max(coeffs, default=0.0) * max(1.0, abs(value)) ** poly.degree
    if scale == 0:
        return 0.0
    return abs(complex(poly.evaluate(value))) / scale


def _float_solution(solution):
    return PolynomialSolution(
        solution.n, tuple(float(c) for c in solution.coefficients)
    )


# ----------------------------------------
# -- Exact mode, one constraint
# ----------------------------------------


def _split_clearing(poly, cleared, var):
    """Square-free part of `poly`, its common factor with the clearing
    factor and the remaining modulus"""

    square_free = poly.squarefree().primitive()
    clearing = as_univariate(cleared.clearing_factor, var)
    common = square_free.gcd(clearing)
    modulus = square_free.exquo(common) if common.degree > 0 else square_free
    return square_free, common, modulus


def _single_constraint(spec, n):
    var = spec.variable
    baseline, cleared, constraints = _prepare(spec, n)
    if len(constraints) != 1:
        raise NotApplicable(
            f"expected one constraint, got {len(constraints)}"
        )

    poly = as_univariate(constraints[0].cleared, var)
    if poly.is_zero():
        raise NotApplicable(
            f"the constraint vanishes for every {var}: no isolated points"
        )
    return baseline, cleared, poly


def constraint_modulus(spec, n=None):
    """Polynomial whose roots are exactly the Juddian values of a
    single-constraint model. None when the constraint is constant"""

    n = spec.require_degree(n)
    _, cleared, poly = _single_constraint(spec, n)
    if poly.degree == 0:
        return None
    return _split_clearing(poly, cleared, spec.variable)[2]


def _exact_points(spec, n, domain, eps):
    var = spec.variable
    baseline, cleared, poly = _single_constraint(spec, n)
    if poly.degree == 0:
        return PointSet([], polynomial=poly)

    square_free, common, modulus = _split_clearing(poly, cleared, var)

    image = apply_operator(baseline.operator, symbolic_solution(cleared))
    certified = all(_vanishes_modulo(c, modulus) for c in image.coeffs)

    points, excluded = [], []
    for interval in sturm_isolate(square_free, domain):
        if _has_root(common, interval):
            excluded.append(interval)
            continue
        value = refine_root(square_free, interval, eps)
        solution = cleared.specialize({var: value})
        points.append(JuddianPoint(var, value, solution, interval, certified))
    return PointSet(
        points, excluded, polynomial=square_free, modulus=modulus
    )


# ----------------------------------------
# -- Exact mode, two constraints
# ----------------------------------------


def _in_mu(value):
    if isinstance(value, UniPoly) and value.var == "mu":
        return value
    return UniPoly((value,), "mu")


def _strip_variable(poly):
    while poly.degree > 0 and is_zero(poly.constant):
        poly = UniPoly(poly.coeffs[1:], poly.var)
    return poly


def _bracket(poly, guess):
    """Rational interval around a float root where poly changes sign"""

    center = Fraction(guess)
    width = Fraction(max(1.0, abs(guess))) / 10**9
    for _ in range(40):
        lo, hi = center - width, center + width
        if poly.evaluate(lo) * poly.evaluate(hi) <= 0:
            return RootInterval(lo, hi)
        width *= 4
    return None


def recover_mu(first, second, kappa, eps=DEFAULT_EPS):
    """The positive mu shared by both constraints at a kappa root, or None.
    Candidates are the real roots of the first one; the second must vanish
    at the chosen candidate"""

    first = _in_mu(substitute(first, "kappa", kappa))
    second = _in_mu(substitute(second, "kappa", kappa))
    base, other = (first, second) if first.degree > 0 else (second, first)
    if base.degree <= 0:
        return None

    best = None
    for root in companion_roots(base):
        if abs(root.imag) > 1e-8 * max(1.0, abs(root)) or root.real <= 0:
            continue
        score = _relative(other, float(root.real))
        if best is None or score < best[0]:
            best = (score, float(root.real))
    if best is None or best[0] > 1e-6:
        return None

    interval = _bracket(base, best[1])
    if interval is None:
        return None
    try:
        mu = refine_interval(base, interval, eps).midpoint
    except AlgebraError:
        return None
    if _relative(other, mu) > RECOVERY_TOL:
        return None
    return mu


def _generalized_points(spec, n, domain, eps):
    free = ("kappa", "mu")
    _, cleared, constraints = _prepare(spec, n, free)
    first, second = (c.cleared for c in constraints)

    if _in_mu(first).degree <= 0 and _in_mu(second).degree <= 0:
        raise NotApplicable("both constraints are independent of mu")
    eliminant = as_univariate(
        resultant(_in_mu(first), _in_mu(second)), "kappa"
    )
    if eliminant.is_zero():
        raise NotApplicable("the constraints share a common factor")

    eliminant = _strip_variable(eliminant)
    if eliminant.degree <= 0:
        return PointSet([], polynomial=eliminant)
    square_free = eliminant.squarefree().primitive()

    points, rejected = [], []
    for interval in sturm_isolate(square_free, domain):
        kappa = refine_root(square_free, interval, eps)
        mu = recover_mu(first, second, kappa, eps)
        if mu is None:
            rejected.append(interval)
            continue
        solution = cleared.specialize({"kappa": kappa, "mu": mu})
        points.append(
            JuddianPoint(
                "kappa", kappa, solution, interval, False, {"mu": mu}
            )
        )
    return PointSet(points, rejected=rejected, polynomial=square_free)


# ----------------------------------------
# -- Numeric mode
# ----------------------------------------


def mu_resultant(first, second):
    """Sylvester determinant in mu with double entries"""

    return numeric_resultant(_in_mu(first), _in_mu(second))


def pointwise(spec, value, n, free=()):
    """Raw cleared constraints and the recurrence at one numeric value of
    the swept parameter"""

    fixed = spec.with_value(spec.variable, Approx(value))
    baseline, cleared, constraints = _prepare(fixed, n, free)
    return baseline, cleared, [c.cleared for c in constraints]


def _target(spec, n):
    """Scalar whose sign changes mark the candidate points"""

    if spec.kind is ModelKind.GENERALIZED and not spec.degenerate:

        def func(value):
            _, _, (first, second) = pointwise(spec, value, n, ("mu",))
            return mu_resultant(first, second)

    else:

        def func(value):
            _, _, constraints = pointwise(spec, value, n)
            return float(constraints[0])

    return func


def _bisect(func, lo, hi, f_lo):
    for _ in range(BISECTION_STEPS):
        mid = (lo + hi) / 2
        if mid in (lo, hi):
            break
        f_mid = func(mid)
        if f_mid == 0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return (lo + hi) / 2


def _numeric_recover_mu(first, second):
    first, second = _in_mu(first), _in_mu(second)
    base, other = (first, second) if first.degree > 0 else (second, first)
    if base.degree <= 0:
        return None
    roots = np.roots(to_numpy(base, float))
    best = None
    for root in roots:
        if abs(root.imag) > 1e-6 * max(1.0, abs(root)) or root.real <= 0:
            continue
        score = _relative(other, float(root.real))
        if best is None or score < best[0]:
            best = (score, float(root.real))
    if best is None or best[0] > 1e-6:
        return None
    return best[1]


def _sample(func, value):
    try:
        return func(value)
    except DegenerateBaseline:
        return math.nan


def _numeric_points(spec, n, domain, grid):
    func = _target(spec, n)
    generalized = spec.kind is ModelKind.GENERALIZED and not spec.degenerate
    lo, hi = float(domain.lo), float(domain.hi)
    values = [lo + (i + 1) * (hi - lo) / grid for i in range(grid)]
    samples = [_sample(func, v) for v in values]

    points, excluded, rejected = [], [], []
    for left, right, f_left, f_right in zip(
        values, values[1:], samples, samples[1:]
    ):
        if f_left == 0:
            root = left
        elif f_left * f_right < 0:
            root = _bisect(func, left, right, f_left)
        else:
            continue

        free = ("mu",) if generalized else ()
        try:
            _, cleared, constraints = pointwise(spec, root, n, free)
        except DegenerateBaseline:
            excluded.append(root)
            continue
        extra = {}
        values_at = {}
        if generalized:
            mu = _numeric_recover_mu(*constraints)
            if mu is None:
                rejected.append(root)
                continue
            extra["mu"] = mu
            values_at["mu"] = Approx(mu)
        factor = cleared.clearing_factor
        for var, value in values_at.items():
            factor = substitute(factor, var, value)
        if is_zero(factor):
            excluded.append(root)
            continue
        solution = _float_solution(cleared.specialize(values_at))
        points.append(JuddianPoint(spec.variable, root, solution, extra=extra))
    return PointSet(points, excluded, rejected)


# ----------------------------------------
# -- Entry points
# ----------------------------------------


def find_points(spec, n=None, domain=None, mode="exact", eps=None, grid=1000):
    """Juddian points of the swept parameter in the domain (lo, hi]"""

    n = spec.require_degree(n)
    sweep = spec.require_sweep()
    domain = domain or sweep.interval
    eps = Fraction(eps) if eps is not None else DEFAULT_EPS

    if mode == "numeric":
        return _numeric_points(spec, n, domain, grid)
    if spec.kind is ModelKind.GENERALIZED and not spec.degenerate:
        return _generalized_points(spec, n, domain, eps)
    return _exact_points(spec, n, domain, eps)


def juddian_points(spec, n=None, domain=None, mode="exact", eps=None):
    """[(parameter value, solution)]"""

    found = find_points(spec, n, domain, mode, eps)
    return [(p.value, p.solution) for p in found.points]


# ----------------------------------------
# -- Sweeps
# ----------------------------------------


class ConstraintSweep:
    """Values of the constraints (and of the Kus polynomial) along the
    sweep grid. Exact mode evaluates the normalized constraint
    polynomials; numeric mode runs the recurrence at every point and
    reports the raw cleared values"""

    def __init__(self, spec, n=None, mode="exact"):
        self.spec = spec
        self.n = spec.require_degree(n)
        self.mode = mode
        self.kus = spec.kind in KUS_MODELS
        spec.require_sweep()

        if mode == "exact":
            _, _, constraints = _prepare(spec, self.n)
            self.polynomials = [
                as_univariate(c.polynomial, spec.variable)
                for c in constraints
            ]
            self.width = len(self.polynomials)
        else:
            self.polynomials = None
            _, _, constraints = pointwise(
                spec, float(spec.sweep.hi), self.n
            )
            self.width = len(constraints)

    @property
    def header(self):
        """CSV column names"""

        names = ["param"] + [f"P{i + 1}" for i in range(self.width)]
        if self.kus:
            names.append("kus")
        return names

    def evaluate(self, value):
        """(value, [P_1 .. P_gamma], kus or None)"""

        if self.mode == "exact":
            row = [float(p.evaluate(value)) for p in self.polynomials]
        else:
            try:
                _, _, constraints = pointwise(self.spec, float(value), self.n)
                row = [float(c) for c in constraints]
            except DegenerateBaseline:
                row = [math.nan] * self.width
        kus = float(kus_value(self.spec, value, self.n)) if self.kus else None
        return value, row, kus


def evaluate_chunk(sweep, values):
    """Worker entry of the parallel sweep"""
    return [sweep.evaluate(value) for value in values]


def split_chunks(values, parts):
    """Contiguous chunks, in order"""

    size = max(1, math.ceil(len(values) / max(1, parts)))
    return [values[i:i + size] for i in range(0, len(values), size)]
