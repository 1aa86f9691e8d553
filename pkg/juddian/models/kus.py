"""Kus polynomials of the Rabi model and the real root count law"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

import math
from fractions import Fraction

from juddian.util import NotApplicable
from juddian.models.spec import ModelKind

# -- Models whose Juddian points are the zeros of the Kus polynomials
KUS_MODELS = (ModelKind.RABI, ModelKind.SCHWEBER, ModelKind.KOC)


def kus_polynomial(n, kappa, mu):
    """K_nn by the upward three-term recurrence

    K_n0 = 1,
    K_nl = (4 l kappa^2 + mu^2 - l^2) K_n,l-1
           - 4 l (l-1) (n-l+1) kappa^2 K_n,l-2

    kappa and mu may be numbers or polynomial variables.
    """

    if n < 0:
        raise ValueError(f"negative degree n={n}")

    k2 = kappa * kappa
    m2 = mu * mu
    before, current = Fraction(0), Fraction(1)
    for l in range(1, n + 1):  # noqa: E741
        before, current = current, (
            (4 * l * k2 + m2 - l * l) * current
            - 4 * l * (l - 1) * (n - l + 1) * k2 * before
        )
    return current


def kus_value(spec, value, n=None):
    """K_nn at a value of the swept parameter, with kappa = g/w and
    mu = Delta/w"""

    if spec.kind not in KUS_MODELS:
        raise NotApplicable(f"no Kus polynomial for the {spec.name} model")
    n = spec.require_degree(n)
    fixed = spec.with_value(spec.variable, value) if spec.variable else spec
    omega = fixed.value("omega")
    return kus_polynomial(
        n, fixed.value("g") / omega, fixed.value("delta") / omega
    )


def root_count_expectation(n, mu):
    """n - floor(mu) real zeros of K_nn in g > 0, clamped at 0.
    Undefined for integer mu"""

    if mu <= 0:
        raise NotApplicable(f"the root count needs mu > 0, got {mu}")
    if Fraction(mu).denominator == 1:
        raise NotApplicable(f"the root count is undefined at integer mu={mu}")
    return max(n - math.floor(mu), 0)
