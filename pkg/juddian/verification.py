"""Certificates for claimed polynomial solutions.

Every check returns an immutable Certificate with the witnesses it was
decided on, so a solution file can be re-verified offline. Comparisons
are exact when no tolerance is given.
"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

import random
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np

from juddian.util import AlgebraError, NotApplicable, format_rational
from juddian.algebra import linalg
from juddian.algebra.poly import UniPoly
from juddian.algebra.roots import companion_roots, sturm_count
from juddian.algebra.scalars import Approx, QuadScalar, is_zero
from juddian.gradation import apply_operator, slice_operator
from juddian.recurrence import (
    PolynomialSolution,
    cleared_recurrence,
    root_sum_coefficients,
    root_sum_indices,
    solve_baseline,
    symbolic_solution,
)
from juddian.models.builders import build_ode
from juddian.models.spec import ModelKind


class CertificateKind(Enum):
    """What a certificate checks"""

    RESIDUAL = "residual"
    BETHE = "bethe"
    SUM_RULE = "sum-rule"
    ROOT_SUMS = "root-sums"
    SL2 = "sl2"
    DEGENERACY = "degeneracy"
    ISOLATION = "isolation"


PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"

# -- Models with a sum rule on the roots of S_n
SUM_RULE_MODELS = (ModelKind.RABI, ModelKind.SCHWEBER, ModelKind.KOC)


@dataclass(frozen=True)
class Tolerances:
    """Numeric tolerances. residual is relative, the others absolute"""

    residual: float = 1e-10
    bethe: float = 1e-8
    sum_rule: float = 1e-9

    @classmethod
    def from_profile(cls, profile):
        """Tolerances stored in the user profile"""

        return cls(
            float(profile.get("residual_tol")),
            float(profile.get("bethe_tol")),
            float(profile.get("sum_rule_tol")),
        )


def _witness(value):
    """JSON form of a witness value. Exact rationals become p/q strings"""

    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [_witness(v) for v in value]
    if isinstance(value, dict):
        return {k: _witness(v) for k, v in value.items()}
    if isinstance(value, UniPoly):
        return value.to_str()
    if isinstance(value, complex):
        return [value.real, value.imag]
    return float(value)


@dataclass(frozen=True)
class Certificate:
    """Outcome of one check"""

    kind: CertificateKind
    status: str
    witnesses: dict = field(default_factory=dict)
    model: Optional[str] = None
    n: Optional[int] = None
    parameter: Optional[dict] = None

    @property
    def passed(self):
        """True for a pass certificate"""
        return self.status == PASS

    @property
    def skipped(self):
        """True when the check does not apply at this point"""
        return self.status == NOT_APPLICABLE

    def to_dict(self):
        """{kind, status, model, n, parameter, witnesses}"""

        return {
            "kind": self.kind.value,
            "status": self.status,
            "model": self.model,
            "n": self.n,
            "parameter": _witness(self.parameter),
            "witnesses": _witness(self.witnesses),
        }

    @classmethod
    def from_dict(cls, data):
        """Certificate read back from its JSON form"""

        return cls(
            CertificateKind(data["kind"]),
            data["status"],
            dict(data.get("witnesses", {})),
            data.get("model"),
            data.get("n"),
            data.get("parameter"),
        )


@dataclass(frozen=True)
class CertificateBundle:
    """The certificates of one Juddian point"""

    certificates: tuple = ()

    @property
    def overall(self):
        """pass iff no member fails. Skipped members do not count"""

        if not self.failed():
            return PASS
        return FAIL

    def kinds(self):
        """Kinds present in the bundle"""
        return [c.kind for c in self.certificates]

    def failed(self):
        """Members with a fail status"""
        return [c for c in self.certificates if c.status == FAIL]

    def to_dict(self):
        """{status, certificates}"""

        return {
            "status": self.overall,
            "certificates": [c.to_dict() for c in self.certificates],
        }

    @classmethod
    def from_dict(cls, data):
        """Bundle read back from its JSON form"""

        return cls(
            tuple(Certificate.from_dict(c) for c in data["certificates"])
        )


def _status(ok):
    return PASS if ok else FAIL


def _magnitude(value):
    return abs(complex(value))


def _close(first, second, tol=None):
    """Exact equality, or |first - second| <= tol"""

    diff = first - second
    if tol is None:
        return is_zero(diff)
    return _magnitude(diff) <= tol


def _as_polynomial(solution):
    if isinstance(solution, PolynomialSolution):
        return solution.polynomial()
    return solution


# ----------------------------------------
# -- Residual
# ----------------------------------------


def residual_certificate(op, solution, tol=None, modulus=None):
    """L S = 0. Exact without tol; relative to the size of the terms of
    L S with tol; reduced modulo a polynomial in the parameter with
    modulus, for a solution symbolic in that parameter"""

    poly = _as_polynomial(solution)
    image = apply_operator(op, poly)
    witnesses = {"degree": poly.degree}
    model = op.meta.get("model")

    if modulus is not None:
        remainders = [
            c % modulus if isinstance(c, UniPoly) else c
            for c in image.coeffs
        ]
        ok = all(is_zero(r) for r in remainders)
        witnesses.update(method="modular", modulus=modulus)
        return Certificate(
            CertificateKind.RESIDUAL,
            _status(ok),
            witnesses,
            model,
            poly.degree,
        )

    if tol is None:
        nonzero = [k for k, c in enumerate(image.coeffs) if not is_zero(c)]
        witnesses.update(method="exact", nonzero_powers=nonzero)
        return Certificate(
            CertificateKind.RESIDUAL,
            _status(not nonzero),
            witnesses,
            model,
            poly.degree,
        )

    sizes = apply_operator(
        op.map_coefficients(_magnitude), poly.map_coeffs(_magnitude)
    )
    scale = max(sizes.coeffs, default=0.0)
    worst = max((_magnitude(c) for c in image.coeffs), default=0.0)
    relative = worst / scale if scale else worst
    witnesses.update(method="relative", max_residual=relative, tol=tol)
    return Certificate(
        CertificateKind.RESIDUAL,
        _status(relative <= tol),
        witnesses,
        model,
        poly.degree,
    )


def modular_certificate(spec, n, modulus):
    """Residual of the symbolic solution at every root of modulus, a
    polynomial in the swept parameter"""

    baseline = solve_baseline(build_ode(spec), n)
    cleared = cleared_recurrence(baseline)
    return residual_certificate(
        baseline.operator, symbolic_solution(cleared), modulus=modulus
    )


# ----------------------------------------
# -- Bethe ansatz
# ----------------------------------------


def _values(poly, point):
    coeffs = [complex(c) for c in reversed(poly.coeffs)]
    return complex(np.polyval(coeffs, point)) if coeffs else 0j


def bethe_residuals(spec, roots, op=None, tol=1e-8):
    """Per-root residuals of the Bethe ansatz equations

        sum_{l != i} 2/(z_i - z_l) + B(z_i)/A(z_i) = 0

    Higher order operators use sum_l X_l(z_i) S^(l)(z_i) = 0 divided by
    X_2(z_i) S'(z_i). A root on a zero of the second order coefficient
    gives a not-applicable certificate naming that root."""

    roots = np.asarray(list(roots), dtype=complex)
    n = len(roots)
    op = op or build_ode(spec, n)
    polys = op.coefficient_polynomials()
    if len(polys) < 3:
        raise NotApplicable("the Bethe equations need a second order term")
    leading = polys[2]
    scale = max((_magnitude(c) for c in leading.coeffs), default=1.0)

    for root in roots:
        if _magnitude(_values(leading, root)) <= 1e-12 * scale:
            return Certificate(
                CertificateKind.BETHE,
                NOT_APPLICABLE,
                {
                    "roots": [complex(r) for r in roots],
                    "collision": complex(root),
                    "reason": "root on a zero of the second order "
                    "coefficient",
                },
                spec.name if spec else op.meta.get("model"),
                n,
            )

    residuals = []
    if op.order == 2:
        for i, root in enumerate(roots):
            others = np.delete(roots, i)
            if np.any(np.abs(root - others) == 0):
                raise AlgebraError(f"repeated root {root}")
            total = np.sum(2 / (root - others)) if len(others) else 0
            total += _values(polys[1], root) / _values(leading, root)
            residuals.append(abs(total))
    else:
        coeffs = np.poly(roots) if n else np.array([1.0])
        derivs = [coeffs]
        for _ in range(op.order):
            derivs.append(np.polyder(derivs[-1]))
        for root in roots:
            terms = [
                _values(polys[l], root) * np.polyval(derivs[l], root)
                for l in range(1, op.order + 1)  # noqa: E741
            ]
            norm = _values(leading, root) * np.polyval(derivs[1], root)
            residuals.append(abs(sum(terms) / norm))

    worst = max(residuals, default=0.0)
    witnesses = {
        "roots": [complex(r) for r in roots],
        "residuals": [float(r) for r in residuals],
        "max_residual": float(worst),
        "tol": tol,
    }
    return Certificate(
        CertificateKind.BETHE,
        _status(worst <= tol),
        witnesses,
        spec.name if spec else op.meta.get("model"),
        n,
    )


# ----------------------------------------
# -- Sum rules
# ----------------------------------------


def _sum_rule_terms(spec, n):
    """(constant, factor) with constant + factor * sum z_i = 0"""

    if spec.kind not in SUM_RULE_MODELS:
        raise NotApplicable(f"no sum rule for the {spec.name} model")
    omega = spec.value("omega")
    g = spec.value("g")
    delta = spec.value("delta")
    mu = delta / omega
    if spec.kind is ModelKind.RABI:
        return delta**2 + 2 * n * g**2, 2 * omega * g
    if spec.kind is ModelKind.SCHWEBER:
        return mu**2, 2 * g / omega
    return mu**2, 4 * (g / omega) ** 2


def sum_rule_certificate(spec, n, roots, tol=1e-9):
    """Delta^2 + 2ng^2 + 2wg sum z_i = 0 for the Rabi model,
    mu^2 + kappa sum z_i = 0 and mu^2 + 4 kappa^2 sum z_i = 0 for the two
    alternative forms. Roots in a translated coordinate are moved back"""

    constant, factor = _sum_rule_terms(spec, n)
    total = sum((complex(r) for r in roots), 0j) + n * float(spec.shift)
    value = complex(constant) + complex(factor) * total
    witnesses = {
        "sum_roots": total,
        "value": value,
        "tol": tol,
    }
    return Certificate(
        CertificateKind.SUM_RULE,
        _status(abs(value) <= tol),
        witnesses,
        spec.name,
        n,
    )


# ----------------------------------------
# -- Zero-order coefficients from the roots
# ----------------------------------------


def _check_simple(poly):
    if poly.degree <= 1:
        return
    if all(isinstance(c, (Fraction, QuadScalar)) for c in poly.coeffs):
        if poly.gcd(poly.derivative()).degree > 0:
            raise AlgebraError(f"repeated roots in {poly}")
        return
    roots = companion_roots(poly)
    gaps = np.abs(roots[:, None] - roots[None, :])
    np.fill_diagonal(gaps, np.inf)
    if np.min(gaps) <= 1e-12 * max(1.0, float(np.max(np.abs(roots)))):
        raise AlgebraError(f"repeated roots in {poly}")


def root_sum_certificate(op, solution, tol=None):
    """The top coefficients of C predicted from A, B and the power sums of
    the roots must equal the actual ones. Powers reached by third and
    higher derivative terms are left out"""

    if not isinstance(solution, PolynomialSolution):
        solution = PolynomialSolution(solution.degree, tuple(solution.coeffs))
    _check_simple(solution.polynomial())

    n = solution.n
    gamma = slice_operator(op)[0].gamma
    predicted = root_sum_coefficients(op, n, sums=solution.power_sums())
    poly_c = op.polynomial(0)

    compared, ok = {}, True
    for power in root_sum_indices(op):
        expected = predicted[gamma - power]
        actual = poly_c[power] if power >= 0 else Fraction(0)
        same = _close(expected, actual, _scaled(tol, expected, actual))
        ok = ok and same
        compared[f"c{power}"] = {
            "predicted": expected,
            "actual": actual,
            "match": same,
        }
    return Certificate(
        CertificateKind.ROOT_SUMS,
        _status(ok),
        {"coefficients": compared, "tol": tol},
        op.meta.get("model"),
        n,
    )


def _scaled(tol, *values):
    if tol is None:
        return None
    return tol * max([1.0] + [_magnitude(v) for v in values])


# ----------------------------------------
# -- sl2 algebraization
# ----------------------------------------


@dataclass(frozen=True)
class Sl2Decomposition:
    """T2 = C++ J+J+ + C+0 J+J0 + C00 J0J0 + C0- J0J- + C-- J-J-
    + C+ J+ + C0 J0 + C- J- + C* with J+ = z^2 D - 2jz, J0 = zD - j,
    J- = D"""

    c_pp: object
    c_p0: object
    c_00: object
    c_0m: object
    c_mm: object
    c_p: object
    c_0: object
    c_m: object
    c_star: object
    j: Fraction
    valid: bool = True
    branch: str = "anomalous"

    def reconstruct(self):
        """(P4, P3, P2), the coefficients of D^2, D and 1"""

        j = self.j
        p4 = UniPoly(
            (self.c_mm, self.c_0m, self.c_00, self.c_p0, self.c_pp), "z"
        )
        p3 = UniPoly(
            (
                -j * self.c_0m + self.c_m,
                -((2 * j - 1) * self.c_00 - self.c_0),
                -(3 * j - 1) * self.c_p0 + self.c_p,
                -2 * (2 * j - 1) * self.c_pp,
            ),
            "z",
        )
        p2 = UniPoly(
            (
                self.c_00 * j**2 - self.c_0 * j + self.c_star,
                2 * j * (j * self.c_p0 - self.c_p),
                2 * j * (2 * j - 1) * self.c_pp,
            ),
            "z",
        )
        return p4, p3, p2

    def to_dict(self):
        """Named coefficients"""

        return {
            "C++": self.c_pp,
            "C+0": self.c_p0,
            "C00": self.c_00,
            "C0-": self.c_0m,
            "C--": self.c_mm,
            "C+": self.c_p,
            "C0": self.c_0,
            "C-": self.c_m,
            "C*": self.c_star,
            "j": self.j,
            "valid": self.valid,
            "branch": self.branch,
        }


def _coeff(poly, k):
    return poly[k] if k <= poly.degree else Fraction(0)


def _anomalous(poly_a, poly_b, poly_c):
    return (
        poly_a.degree == 2 and poly_b.degree == 2 and poly_c.degree <= 1
    )


def _sl2_anomalous(poly_a, poly_b, poly_c, j, tol):
    """Closed form of the grade one family: C++ = C+0 = 0, C+ = b2,
    valid iff 2j b2 + c1 = 0"""

    a0, a1, a2 = (_coeff(poly_a, k) for k in range(3))
    b0, b1, b2 = (_coeff(poly_b, k) for k in range(3))
    c0, c1 = _coeff(poly_c, 0), _coeff(poly_c, 1)

    c_00 = a2
    c_0 = b1 + (2 * j - 1) * a2
    condition = 2 * j * b2 + c1
    return Sl2Decomposition(
        c_pp=Fraction(0),
        c_p0=Fraction(0),
        c_00=c_00,
        c_0m=a1,
        c_mm=a0,
        c_p=b2,
        c_0=c_0,
        c_m=b0 + j * a1,
        c_star=c0 - j**2 * c_00 + j * c_0,
        j=j,
        valid=_close(condition, 0, _scaled(tol, 2 * j * b2, c1)),
        branch="anomalous",
    )


def _sl2_general(poly_a, poly_b, poly_c, j):
    """Linear fit of the nine coefficients to A, B and C. None when the
    operator is not a normally ordered bilinear combination"""

    if poly_a.degree > 4 or poly_b.degree > 3 or poly_c.degree > 2:
        return None

    zero = Fraction(0)
    one = Fraction(1)
    # -- unknowns: C++, C+0, C00, C0-, C--, C+, C0, C-, C*
    rows = [
        ([one, zero, zero, zero, zero, zero, zero, zero, zero], poly_a, 4),
        ([zero, one, zero, zero, zero, zero, zero, zero, zero], poly_a, 3),
        ([zero, zero, one, zero, zero, zero, zero, zero, zero], poly_a, 2),
        ([zero, zero, zero, one, zero, zero, zero, zero, zero], poly_a, 1),
        ([zero, zero, zero, zero, one, zero, zero, zero, zero], poly_a, 0),
        ([-2 * (2 * j - 1)] + [zero] * 8, poly_b, 3),
        ([zero, -(3 * j - 1), zero, zero, zero, one, zero, zero, zero],
         poly_b, 2),
        ([zero, zero, -(2 * j - 1), zero, zero, zero, one, zero, zero],
         poly_b, 1),
        ([zero, zero, zero, -j, zero, zero, zero, one, zero], poly_b, 0),
        ([2 * j * (2 * j - 1)] + [zero] * 8, poly_c, 2),
        ([zero, 2 * j * j, zero, zero, zero, -2 * j, zero, zero, zero],
         poly_c, 1),
        ([zero, zero, j * j, zero, zero, zero, -j, zero, one], poly_c, 0),
    ]
    matrix = [row for row, _, _ in rows]
    rhs = [_coeff(poly, k) for _, poly, k in rows]
    values = linalg.solve(matrix, rhs)
    if values is None:
        return None
    return Sl2Decomposition(*values, j=j, valid=True, branch="general")


def sl2_decompose(op, n, tol=None):
    """sl2 form of a second order operator with spin 2j = n, or None when
    it has none"""

    if op.order != 2:
        return None
    j = Fraction(n, 2)
    poly_a, poly_b, poly_c = op.second_order_part()
    if _anomalous(poly_a, poly_b, poly_c):
        return _sl2_anomalous(poly_a, poly_b, poly_c, j, tol)
    return _sl2_general(poly_a, poly_b, poly_c, j)


def cfrm_value(decomposition, op, solution):
    """-b2 sum z_i - j(3j-1) a2 - j b1, the value C* must take at a
    polynomial solution of degree 2j"""

    poly_a, poly_b, _ = op.second_order_part()
    j = decomposition.j
    p1, _ = solution.power_sums()
    return (
        -_coeff(poly_b, 2) * p1
        - j * (3 * j - 1) * _coeff(poly_a, 2)
        - j * _coeff(poly_b, 1)
    )


def sl2_certificate(op, solution, tol=None):
    """Round trip of the decomposition and the value of C* at the
    solution. None when the operator has no sl2 form"""

    decomposition = sl2_decompose(op, solution.n, tol)
    if decomposition is None:
        return None

    p4, p3, p2 = decomposition.reconstruct()
    originals = op.second_order_part()
    round_trip = all(
        _close(_coeff(rebuilt, k), _coeff(original, k), _scaled(tol, 1.0))
        for rebuilt, original in zip((p4, p3, p2), originals)
        for k in range(max(rebuilt.degree, original.degree, 0) + 1)
    )
    expected = cfrm_value(decomposition, op, solution)
    cfrm = _close(
        decomposition.c_star,
        expected,
        _scaled(tol, decomposition.c_star, expected),
    )
    ok = decomposition.valid and round_trip and cfrm
    witnesses = {
        "decomposition": decomposition.to_dict(),
        "round_trip": round_trip,
        "c_star_at_solution": expected,
        "c_star_match": cfrm,
        "tol": tol,
    }
    return Certificate(
        CertificateKind.SL2,
        _status(ok),
        witnesses,
        op.meta.get("model"),
        solution.n,
    )


def degeneracy_check(decomposition, tol=None):
    """Degenerate levels in the spin j module need all of
    C++ = 0, C+ = (3j-4) C+0, C0 = (2j-3) C00 and C- = (j-1) C0-.
    Passes (nondegeneracy guaranteed) when any of them fails"""

    d = decomposition
    j = d.j
    conditions = {
        "c_pp_zero": _close(d.c_pp, 0, _scaled(tol, d.c_pp)),
        "c_p": _close(d.c_p, (3 * j - 4) * d.c_p0, _scaled(tol, d.c_p)),
        "c_0": _close(d.c_0, (2 * j - 3) * d.c_00, _scaled(tol, d.c_0)),
        "c_m": _close(d.c_m, (j - 1) * d.c_0m, _scaled(tol, d.c_m)),
    }
    guaranteed = not all(conditions.values())
    return Certificate(
        CertificateKind.DEGENERACY,
        _status(guaranteed),
        {"conditions": conditions, "j": j},
    )


# ----------------------------------------
# -- Probes
# ----------------------------------------

# -- Probe points are drawn from [-PROBE_RANGE, PROBE_RANGE]
PROBE_RANGE = 4


def probe_certificate(op, solution, seed=0, count=3, tol=1e-10):
    """(L S)(z) at random rational points, evaluated term by term instead
    of through the image polynomial"""

    rng = random.Random(seed)
    poly = _as_polynomial(solution)
    derivatives = [poly]
    for _ in range(op.order):
        derivatives.append(derivatives[-1].derivative())

    worst = 0.0
    points = []
    for _ in range(count):
        point = Fraction(rng.randint(-1000, 1000) * PROBE_RANGE, 1000)
        total, scale = 0, 0.0
        for term in op.terms:
            value = term.coef * point**term.m
            value = value * derivatives[term.l].evaluate(point)
            total = total + value
            scale = max(scale, _magnitude(value))
        residual = _magnitude(total) / scale if scale else _magnitude(total)
        worst = max(worst, residual)
        points.append(point)

    return Certificate(
        CertificateKind.RESIDUAL,
        _status(worst <= tol),
        {
            "method": "probe",
            "seed": seed,
            "points": points,
            "max_residual": worst,
            "tol": tol,
        },
        op.meta.get("model"),
        poly.degree,
    )


def isolation_certificate(modulus, lo, hi, value):
    """A stored parameter value lies in [lo, hi] and that interval holds
    exactly one root of modulus"""

    inside = lo <= value <= hi
    if modulus.evaluate(lo) == 0:
        count = 1 + (sturm_count(modulus, lo, hi) if lo < hi else 0)
    else:
        count = sturm_count(modulus, lo, hi)
    return Certificate(
        CertificateKind.ISOLATION,
        _status(inside and count == 1),
        {"interval": [lo, hi], "roots": count, "inside": inside},
    )


# ----------------------------------------
# -- Bundles
# ----------------------------------------


def _context(certificate, spec, n, parameter):
    return replace(certificate, model=spec.name, n=n, parameter=parameter)


def point_spec(spec, param, value, extra=None):
    """The spec with the swept parameter (and a recovered mu) fixed"""

    def fix(number):
        return number if isinstance(number, Fraction) else Approx(number)

    fixed = spec.with_value(param, fix(value))
    for name, number in (extra or {}).items():
        fixed = fixed.with_value(name, fix(number))
    return fixed


def certify_point(
    spec,
    n,
    param,
    value,
    solution,
    tolerances=None,
    extra=None,
    modular=None,
):
    """Every applicable certificate of a Juddian point. `modular` is the
    residual certificate shared by all the exact points of a search"""

    tolerances = tolerances or Tolerances()
    fixed = point_spec(spec, param, value, extra)
    op = build_ode(fixed, n)
    parameter = {"name": param, "value": value}
    parameter.update(extra or {})

    members = []
    if modular is not None:
        members.append(modular)
    members.append(residual_certificate(op, solution, tolerances.residual))
    members.append(root_sum_certificate(op, solution, tolerances.residual))

    roots = companion_roots(solution.polynomial()) if n else []
    if n:
        try:
            bethe = bethe_residuals(fixed, roots, op, tolerances.bethe)
        except AlgebraError as exc:
            bethe = Certificate(
                CertificateKind.BETHE, FAIL, {"reason": str(exc)}
            )
        members.append(bethe)
    try:
        members.append(
            sum_rule_certificate(fixed, n, roots, tolerances.sum_rule)
        )
    except NotApplicable:
        pass

    sl2 = sl2_certificate(op, solution, tolerances.residual)
    if sl2 is not None:
        members.append(sl2)
        decomposition = sl2_decompose(op, n, tolerances.residual)
        if decomposition.valid:
            members.append(
                degeneracy_check(decomposition, tolerances.residual)
            )

    return CertificateBundle(
        tuple(_context(c, spec, n, parameter) for c in members)
    )
