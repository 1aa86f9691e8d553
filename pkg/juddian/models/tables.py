"""Closed forms of the induced multiplicators F_g(k) on the n-th baseline"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

from dataclasses import dataclass, field
from fractions import Fraction

from juddian.util import NotApplicable
from juddian.models.spec import ModelKind
from juddian.models.builders import (
    HALF,
    degenerate_constant,
    generalized_constants,
    squeezing,
)


@dataclass(frozen=True)
class CoefficientTable:
    """k -> F_g(k) for every grade between gamma and gamma_star"""

    n: int
    entries: dict = field(repr=False)

    @property
    def gamma(self):
        """Highest grade"""
        return max(self.entries)

    @property
    def gamma_star(self):
        """Lowest grade"""
        return min(self.entries)

    def value(self, grade, k):
        """F_grade(k), zero outside the grade range"""

        entry = self.entries.get(grade)
        return entry(k) if entry else Fraction(0)

    def rows(self, upto):
        """[(k, {grade: F_grade(k)})] for k = 0 .. upto"""

        grades = sorted(self.entries, reverse=True)
        return [
            (k, {g: self.entries[g](k) for g in grades})
            for k in range(upto + 1)
        ]


def _falling(k, length):
    out = 1
    for i in range(length):
        out *= k - i
    return out


# ----------------------------------------
# -- Tables per model
# ----------------------------------------


def _driven_table(spec, n, free, drive, sign):
    omega = spec.value("omega")
    delta = spec.value("delta", free)
    g = spec.value("g", free)

    return {
        1: lambda k: 2 * sign * omega * g * (n - k),
        0: lambda k: (
            k * (k - 2 * n) * omega**2
            + n**2 * omega**2
            - delta**2
            - 2 * n * g**2
            + 2 * sign * (n - k) * omega * drive
        ),
        -1: lambda k: (
            sign
            * k
            * g
            / omega
            * (2 * g**2 - omega**2 - 2 * sign * omega * drive)
        ),
        -2: lambda k: -k * (k - 1) * g**2,
    }


def _rabi_table(spec, n, free):
    return _driven_table(spec, n, free, Fraction(0), 1)


def _driven_rabi_table(spec, n, free):
    drive = spec.value("delta_drive", free)
    return _driven_table(spec, n, free, drive, spec.branch)


def _squeezed_table(spec, n, free, scale):
    """Two-photon (scale 4) and two-mode (scale 1) in the scaled
    coordinate, with u = (n + q) Omega - q"""

    omega = spec.value("omega")
    delta = spec.value("delta", free)
    q = spec.value("q")
    big = squeezing(spec, free)
    qh = q + HALF
    u = (n + q) * big - q
    top = 2 if scale == 4 else 8

    table = {
        1: lambda k: top * omega**3 * big * (1 - big) * (k - n),
        0: lambda k: (
            4 * omega**2 * (big**2 - 3 * big + 1) * k * (k - 1)
            + (
                8 * omega**2 * q * (1 - big)
                + 8 * omega**2 * qh * (1 - big) ** 2
                + 8 * omega**2 * u
                - 4 * omega**2
            )
            * k
            + 4 * omega**2 * q**2 * (1 - big) ** 2
            - 4 * omega**2 * u**2
            + delta**2
        ),
        -1: lambda k: (
            4 * scale * omega * (big - 1) * _falling(k, 3)
            + 4 * scale * omega * (3 * qh * big - 3 * q - 1) * _falling(k, 2)
            + 8 * scale * omega * q * (qh * big - q) * k
        ),
        -2: lambda k: (
            scale**2 * _falling(k, 4)
            + 4 * scale**2 * qh * _falling(k, 3)
            + 4 * scale**2 * q * qh * _falling(k, 2)
        ),
    }

    if spec.scaled:
        return table

    # -- Bargmann coordinate: grade k picks up g^(-k)
    g = spec.value("g")
    rescaled = {}
    for grade, entry in table.items():
        scale = 1 / g**grade if grade >= 0 else g ** (-grade)
        rescaled[grade] = lambda k, f=entry, c=scale: f(k) * c
    return rescaled


def _two_photon_table(spec, n, free):
    return _squeezed_table(spec, n, free, 4)


def _two_mode_table(spec, n, free):
    return _squeezed_table(spec, n, free, 1)


def _generalized_table(spec, n, free):
    """kappa times the multiplicators of A3, B3, C2"""

    const = generalized_constants(spec, free)
    kappa, mu = const["kappa"], const["mu"]

    if spec.degenerate:
        d0 = degenerate_constant(spec, free, Fraction(n))
        return {
            1: lambda k: 2 * kappa * (n - k),
            0: lambda k: k * (k - 1 - 2 * n) + d0,
            -1: lambda k: 2 * k * kappa * (kappa**2 + 1),
            -2: lambda k: -k * (k - 1) * kappa**2,
        }

    smu = const["s"] * mu
    lam = const["h"] * kappa**2
    e = n - lam
    k2, k3, k4 = kappa**2, kappa**3, kappa**4
    c1 = e * (e + 1) - mu**2 + mu * const["eta"] - k2 - k4 + smu - 2 * smu * n
    c0 = -k2 * (
        mu**2 - n**2 + 2 * n * lam - lam**2 + lam + k2 + k4
    ) - smu * (n - lam - k2)

    # -- c0 above is already kappa * c0(n)
    return {
        2: lambda k: 2 * k2 * (n - k),
        1: lambda k: (
            kappa * k * (k - 1 - 2 * n) + 2 * kappa * smu * k + kappa * c1
        ),
        0: lambda k: k * (2 * k4 + (2 * n - k) * smu + k2) + c0,
        -1: lambda k: -k * (kappa * (smu - k2) + (k - 1) * k3 + 2 * smu * k3),
        -2: lambda k: k * (k - 1) * smu * k2,
    }


def _schweber_table(spec, n, free):
    omega = spec.value("omega")
    kappa = 2 * spec.value("g", free) / omega
    mu = spec.value("delta", free) / omega

    return {
        1: lambda k: kappa * (n - k),
        0: lambda k: k * (k - 2 * n) + kappa**2 * (k - n) + n**2 - mu**2,
        -1: lambda k: kappa * k * (n - k),
    }


def _koc_table(spec, n, free):
    omega = spec.value("omega")
    kappa = spec.value("g", free) / omega
    mu = spec.value("delta", free) / omega

    return {
        1: lambda k: 4 * kappa**2 * (k - n),
        0: lambda k: -((k - n) ** 2) + 4 * kappa**2 * (n - k) + mu**2,
        -1: lambda k: k * (k - n),
    }


_TABLES = {
    ModelKind.RABI: _rabi_table,
    ModelKind.DRIVEN: _driven_rabi_table,
    ModelKind.TWO_PHOTON: _two_photon_table,
    ModelKind.TWO_MODE: _two_mode_table,
    ModelKind.GENERALIZED: _generalized_table,
    ModelKind.SCHWEBER: _schweber_table,
    ModelKind.KOC: _koc_table,
}


def coefficient_table(spec, n=None, free=None):
    """Closed-form multiplicators of the model on the n-th baseline"""

    n = spec.require_degree(n)
    if spec.shift:
        raise NotApplicable(
            "coefficient tables are given in the model's own coordinate"
        )
    free = spec.free_parameters() if free is None else tuple(free)
    return CoefficientTable(n, _TABLES[spec.kind](spec, n, free))
