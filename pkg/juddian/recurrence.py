"""Polynomial solutions on a baseline.

On the n-th baseline F_gamma(n) = 0 fixes the energy. The coefficients of
S_n(z) = sum a_k z^k then follow top-down from the slices:

    a_k F_gamma(k) = - sum_{g < gamma} a_{k+gamma-g} F_g(k+gamma-g)

and the gamma coefficients of z^0 .. z^(gamma-1) of L S_n left over are the
constraints P_1 .. P_gamma. The recurrence is run fraction free: with
D_k = prod_{j=k}^{n-1} F_gamma(j) the scaled coefficients a_k D_k and the
cleared constraints P_g D_0 stay in the coefficient ring.
"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from juddian.util import AlgebraError, BaselineError, DegenerateBaseline
from juddian.algebra import linalg
from juddian.algebra.poly import (
    UniPoly,
    coefficient_in,
    degree_in,
    leading_rational,
    rank,
    substitute,
)
from juddian.algebra.ratfunc import RatFunc
from juddian.algebra.scalars import is_zero, sign_of
from juddian.gradation import (
    GradeSignature,
    Slice,
    apply_operator,
    induced_multiplicator,
    normalize_lowest_grade,
    slice_operator,
)


class Existence(Enum):
    """Outcome of the existence decision"""

    EXISTS_UNIQUE = "exists-unique"
    EXISTS = "exists"
    NONE = "none"


@dataclass(frozen=True)
class BaselineSolution:
    """Operator with the baseline energy substituted"""

    n: int
    energy: object
    operator: object
    signature: GradeSignature
    slices: tuple
    energy_var: str = "E"

    @property
    def gamma(self):
        """Highest grade"""
        return self.signature.gamma

    def slice(self, grade):
        """Slice of the given grade (empty outside the signature)"""

        index = self.signature.gamma - grade
        if 0 <= index < len(self.slices):
            return self.slices[index]
        return Slice(grade, ())

    def multiplicators(self, upto):
        """{grade: [F_g(0), ..., F_g(upto)]}"""

        return {
            s.grade: [induced_multiplicator(s, k) for k in range(upto + 1)]
            for s in self.slices
        }


@dataclass(frozen=True)
class PolynomialSolution:
    """Monic S_n, coefficients lowest degree first"""

    n: int
    coefficients: tuple
    roots: tuple = ()
    residual: Optional[UniPoly] = None

    def __post_init__(self):
        if len(self.coefficients) != self.n + 1:
            raise AlgebraError("a solution of degree n has n+1 coefficients")

    def polynomial(self, var="z"):
        """S_n as a polynomial"""
        return UniPoly(self.coefficients, var)

    def power_sums(self):
        """(sum z_i, sum z_i^2) of the roots from the coefficients"""

        if self.n == 0:
            return Fraction(0), Fraction(0)
        e1 = -self.coefficients[self.n - 1]
        e2 = self.coefficients[self.n - 2] if self.n >= 2 else Fraction(0)
        return e1, e1 * e1 - 2 * e2


@dataclass(frozen=True)
class ClearedSolution:
    """Fraction-free coefficients a_k D_k and the partial products D_k"""

    baseline: BaselineSolution
    scaled: tuple
    partial: tuple
    table: dict = field(repr=False)

    @property
    def clearing_factor(self):
        """D_0 = prod_{k=0}^{n-1} F_gamma(k)"""
        return self.partial[0]

    def specialize(self, values):
        """Raw solution at fixed parameter values {var: value}"""

        def fix(item):
            for var, value in values.items():
                item = substitute(item, var, value)
            return item

        coeffs = []
        for scaled, partial in zip(self.scaled, self.partial):
            den = fix(partial)
            if is_zero(den):
                raise DegenerateBaseline(
                    len(coeffs), self.baseline.gamma, self.baseline.n
                )
            coeffs.append(fix(scaled) / den)
        return PolynomialSolution(self.baseline.n, tuple(coeffs))


@dataclass(frozen=True)
class ConstraintPolynomial:
    """Cleared P_g and its normalized form"""

    grade: int
    polynomial: object
    cleared: object
    clearing_factor: object


@dataclass(frozen=True)
class Decision:
    """Existence decision with the values that support it"""

    status: Existence
    certificate: dict
    solution: Optional[PolynomialSolution] = None


# ----------------------------------------
# -- Baseline
# ----------------------------------------


def _slices_in_range(op, gamma, gamma_star):
    grades = {g: [] for g in range(gamma, gamma_star - 1, -1)}
    for term in op.terms:
        if term.grade not in grades:
            raise BaselineError(
                f"term of grade {term.grade} outside [{gamma_star}, {gamma}]"
            )
        grades[term.grade].append(term)
    return tuple(Slice(g, tuple(t)) for g, t in grades.items())


def solve_baseline(op, n, energy_var="E"):
    """Solve F_gamma(n) = 0 for the energy and substitute it.
    An operator with gamma_star > 0 is first divided by z^gamma_star"""

    if n < 0:
        raise BaselineError(f"negative degree n={n}")

    op = normalize_lowest_grade(op)
    signature, slices = slice_operator(op)
    top = induced_multiplicator(slices[0], n)
    degree = degree_in(top, energy_var)

    if degree >= 2:
        raise BaselineError(
            f"F_{signature.gamma}({n}) is nonlinear in the energy"
        )

    if degree == 1:
        slope = coefficient_in(top, energy_var, 1)
        offset = coefficient_in(top, energy_var, 0)
        try:
            energy = -offset / slope
        except (AlgebraError, ZeroDivisionError) as exc:
            raise BaselineError(
                "the baseline energy is not a polynomial in the parameters"
            ) from exc
        operator = op.substitute(energy_var, energy)
    else:
        if not is_zero(top):
            raise BaselineError(
                f"no baseline: F_{signature.gamma}({n}) = {top} does not "
                "depend on the energy"
            )
        energy = None
        operator = op

    slices = _slices_in_range(
        operator, signature.gamma, signature.gamma_star
    )
    return BaselineSolution(
        n, energy, operator, signature, slices, energy_var
    )


# ----------------------------------------
# -- Recurrence
# ----------------------------------------


def cleared_recurrence(baseline):
    """Scaled coefficients a_k D_k, computed in the coefficient ring"""

    n, gamma = baseline.n, baseline.gamma
    gamma_star = baseline.signature.gamma_star
    table = baseline.multiplicators(n)
    top = table[gamma]

    for k in range(n):
        if is_zero(top[k]):
            raise DegenerateBaseline(k, gamma, n)

    scaled = [Fraction(0)] * (n + 1)
    scaled[n] = Fraction(1)
    for k in range(n - 1, -1, -1):
        total = Fraction(0)
        run = Fraction(1)
        for i in range(k + 1, min(n, k + gamma - gamma_star) + 1):
            if i > k + 1:
                run = run * top[i - 1]
            grade = gamma - (i - k)
            total = total + scaled[i] * table[grade][i] * run
        scaled[k] = -total

    partial = [Fraction(1)] * (n + 1)
    for k in range(n - 1, -1, -1):
        partial[k] = top[k] * partial[k + 1]

    return ClearedSolution(baseline, tuple(scaled), tuple(partial), table)


def _ratio(num, den):
    if isinstance(den, UniPoly) and den.degree > 0:
        if isinstance(num, UniPoly) and num.var != den.var:
            if rank(num.var) > rank(den.var):
                raise AlgebraError(
                    "raw coefficients need a single sweep parameter"
                )
        return RatFunc(num, den, den.var)
    return num / den


def downward_recurrence(baseline, cleared=None):
    """Monic S_n on the baseline. Coefficients are scalars at fixed
    parameters and rational functions of the sweep parameter otherwise"""

    cleared = cleared or cleared_recurrence(baseline)
    coeffs = tuple(
        _ratio(s, d) for s, d in zip(cleared.scaled, cleared.partial)
    )
    return PolynomialSolution(baseline.n, coeffs)


def symbolic_solution(cleared, var="z"):
    """D_0 * S_n, whose coefficients a_k D_0 = a_k D_k prod_{j<k} F_gamma(j)
    stay in the coefficient ring"""

    top = cleared.table[cleared.baseline.gamma]
    coeffs = []
    prefix = Fraction(1)
    for k, scaled in enumerate(cleared.scaled):
        coeffs.append(scaled * prefix)
        if k < cleared.baseline.n:
            prefix = prefix * top[k]
    return UniPoly(coeffs, var)


def normalize_constraint(value):
    """Monic in the sweep parameter when it has positive degree, positive
    sign for a constant"""

    if isinstance(value, UniPoly) and value.degree >= 1:
        return value / leading_rational(value)
    if isinstance(value, UniPoly):
        value = value.constant
    try:
        return -value if sign_of(value) < 0 else value
    except (TypeError, AlgebraError):
        return value


def constraint_polynomials(baseline, solution=None):
    """The gamma cleared constraints P_1 .. P_gamma; P_g is the
    coefficient of z^(g-1) of D_0 * L S_n"""

    gamma = baseline.gamma
    if gamma <= 0:
        return []

    cleared = (
        solution
        if isinstance(solution, ClearedSolution)
        else cleared_recurrence(baseline)
    )
    n = baseline.n
    gamma_star = baseline.signature.gamma_star
    table = cleared.table
    top = table[gamma]

    prefix = [Fraction(1)] * (n + 1)
    for j in range(1, n + 1):
        prefix[j] = prefix[j - 1] * top[j - 1]

    result = []
    for index in range(1, gamma + 1):
        power = index - 1
        total = Fraction(0)
        for j in range(0, min(n, power - gamma_star) + 1):
            grade = power - j
            if grade > gamma:
                continue
            total = total + cleared.scaled[j] * table[grade][j] * prefix[j]
        result.append(
            ConstraintPolynomial(
                index,
                normalize_constraint(total),
                total,
                cleared.clearing_factor,
            )
        )
    return result


def raw_constraints(baseline, solution):
    """Uncleared P_g = sum_j a_j F_{g-1-j}(j) from raw coefficients"""

    n, gamma = baseline.n, baseline.gamma
    table = baseline.multiplicators(n)
    result = []
    for index in range(1, gamma + 1):
        power = index - 1
        total = Fraction(0)
        for j, coef in enumerate(solution.coefficients):
            grade = power - j
            if grade in table:
                total = total + coef * table[grade][j]
        result.append(total)
    return result


# ----------------------------------------
# -- Existence
# ----------------------------------------


def _image_matrix(op, n):
    images = [apply_operator(op, UniPoly.monomial(k)) for k in range(n + 1)]
    size = max((p.degree for p in images), default=-1) + 1
    return [[img[row] for img in images] for row in range(size)]


def linear_solution(op, n):
    """Monic degree n solution by linear algebra, or None"""

    matrix = _image_matrix(op, n)
    if not matrix:
        return PolynomialSolution(
            n, tuple([Fraction(0)] * n + [Fraction(1)])
        )
    lhs = [row[:n] for row in matrix]
    rhs = [-row[n] for row in matrix]
    if n == 0:
        return None if any(not is_zero(v) for v in rhs) else (
            PolynomialSolution(0, (Fraction(1),))
        )
    values = linalg.solve(lhs, rhs)
    if values is None:
        return None
    return PolynomialSolution(n, tuple(values) + (Fraction(1),))


def kernel_solution(op, n):
    """Some nonzero polynomial solution of degree at most n, or None"""

    matrix = _image_matrix(op, n)
    basis = linalg.nullspace(matrix, n + 1) if matrix else [
        [Fraction(0)] * n + [Fraction(1)]
    ]
    if not basis:
        return None
    vector = basis[-1]
    degree = max(i for i, v in enumerate(vector) if not is_zero(v))
    lead = vector[degree]
    coeffs = tuple(v / lead for v in vector[: degree + 1])
    return PolynomialSolution(degree, coeffs)


def existence_decision(op, n):
    """exists-unique | exists | none for a degree n polynomial solution"""

    signature, _ = slice_operator(op)
    certificate = {"gamma": signature.gamma, "n": n}

    if signature.gamma < 0:
        solution = kernel_solution(op, n)
        certificate["rule"] = "negative grade"
        status = Existence.EXISTS if solution else Existence.NONE
        return Decision(status, certificate, solution)

    try:
        baseline = solve_baseline(op, n)
    except BaselineError as exc:
        certificate["reason"] = str(exc)
        return Decision(Existence.NONE, certificate)

    certificate["energy"] = baseline.energy
    try:
        cleared = cleared_recurrence(baseline)
    except DegenerateBaseline as exc:
        certificate["degenerate_k"] = exc.k
        solution = linear_solution(baseline.operator, n)
        status = Existence.EXISTS if solution else Existence.NONE
        return Decision(status, certificate, solution)

    top = cleared.table[signature.gamma]
    certificate["F_gamma"] = top[:n]
    constraints = constraint_polynomials(baseline, cleared)
    certificate["constraints"] = [c.cleared for c in constraints]

    if all(is_zero(c.cleared) for c in constraints):
        solution = downward_recurrence(baseline, cleared)
        return Decision(Existence.EXISTS_UNIQUE, certificate, solution)
    return Decision(Existence.NONE, certificate)


# ----------------------------------------
# -- Coefficient identities of C(z)
# ----------------------------------------


def power_sums(roots, tol=None):
    """(sum z_i, sum z_i^2), refusing repeated roots"""

    roots = list(roots)
    for i, first in enumerate(roots):
        for second in roots[i + 1:]:
            gap = first - second
            if (tol is None and gap == 0) or (
                tol is not None and abs(complex(gap)) <= tol
            ):
                raise AlgebraError(f"repeated root {first}")
    p1 = sum(roots, Fraction(0))
    p2 = sum((r * r for r in roots), Fraction(0))
    return p1, p2


def root_sum_coefficients(op, n, roots=None, sums=None):
    """Predicted (c_gamma, c_gamma-1, c_gamma-2) of C(z) for a degree n
    polynomial solution with the given simple roots (or power sums)"""

    gamma = slice_operator(op)[0].gamma
    p1, p2 = sums if sums is not None else power_sums(roots)
    poly_a, poly_b, _ = op.second_order_part()

    def a(i):
        return poly_a[i] if i >= 0 else Fraction(0)

    def b(i):
        return poly_b[i] if i >= 0 else Fraction(0)

    falling = n * (n - 1)
    c_top = -falling * a(gamma + 2) - n * b(gamma + 1)
    c_mid = (
        -(2 * (n - 1) * a(gamma + 2) + b(gamma + 1)) * p1
        - falling * a(gamma + 1)
        - n * b(gamma)
    )
    c_low = (
        -a(gamma + 2) * (p1 * p1 + (2 * n - 3) * p2)
        - b(gamma + 1) * p2
        - (2 * (n - 1) * a(gamma + 1) + b(gamma)) * p1
        - falling * a(gamma)
        - n * b(gamma - 1)
    )
    return c_top, c_mid, c_low


def root_sum_indices(op):
    """Powers of z whose C coefficient the identities predict. Third and
    higher derivative terms only reach powers up to their own grade"""

    gamma = slice_operator(op)[0].gamma
    higher = [t.grade for t in op.terms if t.l >= 3]
    limit = max(higher) if higher else None
    return [
        k
        for k in (gamma, gamma - 1, gamma - 2)
        if limit is None or k > limit
    ]
