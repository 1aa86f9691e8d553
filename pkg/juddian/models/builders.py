"""Differential operators of the Rabi family in the Bargmann space.

Every builder returns the operator with the energy E left symbolic.
Parameters listed in `free` become polynomial variables, the others are
exact rationals, elements of a quadratic extension, or Approx values in
numeric mode.
"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

from fractions import Fraction

from juddian.algebra.poly import UniPoly
from juddian.algebra.scalars import sqrt_of
from juddian.gradation import OdeOperator
from juddian.models.spec import ModelKind

# -- Energy variable of every operator
ENERGY = "E"

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


def _energy():
    return UniPoly.variable(ENERGY)


def _has(spec, name, free):
    return name in free or name in spec.params


# ----------------------------------------
# -- Rabi and driven Rabi
# ----------------------------------------


def _driven(spec, free, drive, sign):
    """A = w^2 z^2 - g^2 and the branch `sign` of the driven model.
    drive = 0, sign = +1 is the Rabi model"""

    omega = spec.value("omega")
    delta = spec.value("delta", free)
    g = spec.value("g", free)
    E = _energy()

    terms = [
        (omega**2, 2, 2),
        (-(g**2), 0, 2),
        (-2 * sign * omega * g, 2, 1),
        (omega**2 - 2 * g**2 - 2 * omega * E, 1, 1),
        (sign * (2 * g * (g**2 / omega - sign * drive) - g * omega), 0, 1),
        (2 * sign * g * (g**2 / omega + E - sign * drive), 1, 0),
        (E**2 - (drive - sign * g**2 / omega) ** 2 - delta**2, 0, 0),
    ]
    return terms


def _rabi(spec, free):
    return _driven(spec, free, Fraction(0), 1)


def _driven_rabi(spec, free):
    drive = spec.value("delta_drive", free)
    return _driven(spec, free, drive, spec.branch)


# ----------------------------------------
# -- Two-photon and two-mode, scaled coordinate x = z/g
# ----------------------------------------


def squeezing(spec, free=()):
    """Omega = sqrt(1 - 4g^2/w^2) (two-photon) or
    Lambda = sqrt(1 - g^2/w^2) (two-mode)"""

    name, factor = (
        ("Omega", 4) if spec.kind is ModelKind.TWO_PHOTON else ("Lambda", 1)
    )
    if _has(spec, name, free):
        return spec.value(name, free)
    omega, g = spec.value("omega"), spec.value("g")
    return sqrt_of(1 - factor * g**2 / omega**2)


def _two_photon(spec, free):
    omega = spec.value("omega")
    delta = spec.value("delta", free)
    q = spec.value("q")
    big = squeezing(spec, free)
    E = _energy()
    qh = q + HALF

    return [
        (16, 2, 4),
        (16 * omega * (big - 1), 2, 3),
        (64 * qh, 1, 3),
        (4 * omega**2 * (big**2 - 3 * big + 1), 2, 2),
        (16 * omega * (3 * qh * big - 3 * q - 1), 1, 2),
        (64 * q * qh, 0, 2),
        (2 * omega**3 * big * (1 - big), 2, 1),
        (
            8 * omega**2 * q * (1 - big)
            + 8 * omega**2 * qh * (1 - big) ** 2
            + 4 * omega * (E - 2 * omega * (q + QUARTER)),
            1,
            1,
        ),
        (32 * omega * q * (qh * big - q), 0, 1),
        (omega**2 * (1 - big) * (2 * q * omega * big - omega / 2 - E), 1, 0),
        (
            4 * omega**2 * q**2 * (1 - big) ** 2
            - (E - 2 * omega * (q - QUARTER)) ** 2
            + delta**2,
            0,
            0,
        ),
    ]


def _two_mode(spec, free):
    omega = spec.value("omega")
    delta = spec.value("delta", free)
    q = spec.value("q")
    big = squeezing(spec, free)
    E = _energy()
    qh = q + HALF

    return [
        (1, 2, 4),
        (4 * omega * (big - 1), 2, 3),
        (4 * qh, 1, 3),
        (4 * omega**2 * (big**2 - 3 * big + 1), 2, 2),
        (4 * omega * (3 * qh * big - 3 * q - 1), 1, 2),
        (4 * q * qh, 0, 2),
        (8 * omega**3 * big * (1 - big), 2, 1),
        (
            8 * omega**2 * q * (1 - big)
            + 8 * omega**2 * qh * (1 - big) ** 2
            + 4 * omega * (E - 2 * omega * q),
            1,
            1,
        ),
        (8 * omega * q * (qh * big - q), 0, 1),
        (4 * omega**2 * (1 - big) * (2 * q * omega * big - omega - E), 1, 0),
        (
            4 * omega**2 * q**2 * (1 - big) ** 2
            - (E - 2 * omega * (q - HALF)) ** 2
            + delta**2,
            0,
            0,
        ),
    ]


# ----------------------------------------
# -- Generalized Rabi
# ----------------------------------------


def generalized_constants(spec, free=()):
    """kappa, mu and the ratios fixed by r = g2/g1:
    s = 2r/(1-r^2), h = (1+r^2)/(2r), eta = (1+r^2)/(1-r^2),
    so that lambda_+ = h kappa^2 and kappa nu = s mu"""

    omega = spec.value("omega")
    g1, g2 = spec.value("g1"), spec.value("g2")
    ratio = g2 / g1
    s = 2 * ratio / (1 - ratio**2)
    h = (1 + ratio**2) / (2 * ratio)
    eta = (1 + ratio**2) / (1 - ratio**2)

    if _has(spec, "kappa", free):
        kappa = spec.value("kappa", free)
    else:
        kappa = sqrt_of(g1 * g2 / omega**2)

    if _has(spec, "mu", free):
        mu = spec.value("mu", free)
    elif spec.degenerate:
        mu = -(kappa**2) / s
    else:
        mu = spec.value("delta") / omega

    return {"kappa": kappa, "mu": mu, "s": s, "h": h, "eta": eta}


def _generalized(spec, free):
    """kappa times A3 S'' + B3 S' + C2 S, polynomial in kappa and mu"""

    if spec.degenerate:
        return _generalized_degenerate(spec, free)

    const = generalized_constants(spec, free)
    kappa, mu = const["kappa"], const["mu"]
    smu = const["s"] * mu
    lam = const["h"] * kappa**2
    omega = spec.value("omega")
    E = _energy()
    e = E / omega
    eps = e + lam

    k2, k3, k4 = kappa**2, kappa**3, kappa**4
    return [
        # -- kappa A3 = (z^2 - kappa^2)(kappa z - s mu)
        (kappa, 3, 2),
        (-smu, 2, 2),
        (-k3, 1, 2),
        (k2 * smu, 0, 2),
        # -- kappa B3
        (-2 * k2, 3, 1),
        (2 * kappa * smu - 2 * eps * kappa, 2, 1),
        (2 * k4 + 2 * eps * smu + k2 - smu, 1, 1),
        (-2 * k3 * smu - kappa * smu + k3, 0, 1),
        # -- kappa C2
        (2 * k2 * eps, 2, 0),
        (
            kappa * (e * (e + 1) - mu**2 + mu * const["eta"] - k2 - k4)
            + kappa * smu
            - 2 * smu * eps * kappa,
            1,
            0,
        ),
        (
            -k2 * (mu**2 - eps**2 + 2 * eps * lam - lam**2 + lam + k2 + k4)
            - smu * (eps - lam - k2),
            0,
            0,
        ),
    ]


def degenerate_constant(spec, free=(), eps=None):
    """d0/kappa of the nu = -kappa branch"""

    const = generalized_constants(spec, free)
    kappa, mu = const["kappa"], const["mu"]
    lam = const["h"] * kappa**2
    if eps is None:
        eps = _energy() / spec.value("omega") + lam
    return (
        eps**2
        + lam * (lam - 2)
        - mu**2
        - eps * (2 * lam - 1)
        - 2 * kappa**2
        - kappa**4
    )


def _generalized_degenerate(spec, free):
    """The nu = -kappa operator with the common factor (z + kappa) removed"""

    const = generalized_constants(spec, free)
    kappa = const["kappa"]
    lam = const["h"] * kappa**2
    eps = _energy() / spec.value("omega") + lam

    return [
        (1, 2, 2),
        (-(kappa**2), 0, 2),
        (-2 * kappa, 2, 1),
        (-2 * eps, 1, 1),
        (2 * kappa * (kappa**2 + 1), 0, 1),
        (2 * kappa * eps, 1, 0),
        (degenerate_constant(spec, free, eps), 0, 0),
    ]


# ----------------------------------------
# -- Alternative forms of the Rabi model
# ----------------------------------------


def _schweber(spec, free):
    """kappa = 2g/w, eps = (E + g^2/w)/w"""

    omega = spec.value("omega")
    g = spec.value("g", free)
    mu = spec.value("delta", free) / omega
    kappa = 2 * g / omega
    eps = (_energy() + g**2 / omega) / omega

    return [
        (1, 2, 2),
        (-kappa, 1, 2),
        (-kappa, 2, 1),
        (kappa**2 - 2 * eps + 1, 1, 1),
        (kappa * eps - kappa, 0, 1),
        (kappa * eps, 1, 0),
        (eps**2 - mu**2 - kappa**2 * eps, 0, 0),
    ]


def _koc(spec, free):
    """kappa = g/w, eps = E/w"""

    omega = spec.value("omega")
    g = spec.value("g", free)
    mu = spec.value("delta", free) / omega
    kappa = g / omega
    eps = _energy() / omega
    k2 = kappa**2

    return [
        (1, 1, 2),
        (-1, 2, 2),
        (4 * k2, 2, 1),
        (-(2 * k2 - 2 * eps + 1), 1, 1),
        (1 - eps - k2, 0, 1),
        (-4 * k2 * (eps + k2), 1, 0),
        (3 * k2**2 + 2 * eps * k2 - eps**2 + mu**2, 0, 0),
    ]


_BUILDERS = {
    ModelKind.RABI: _rabi,
    ModelKind.DRIVEN: _driven_rabi,
    ModelKind.TWO_PHOTON: _two_photon,
    ModelKind.TWO_MODE: _two_mode,
    ModelKind.GENERALIZED: _generalized,
    ModelKind.SCHWEBER: _schweber,
    ModelKind.KOC: _koc,
}


def baseline_energy(spec, n, free=None):
    """Closed form E_n of the n-th baseline"""

    free = spec.free_parameters() if free is None else tuple(free)
    omega = spec.value("omega")
    kind = spec.kind

    if kind is ModelKind.TWO_PHOTON:
        big = squeezing(spec, free)
        return -omega / 2 + 2 * (n + spec.value("q")) * omega * big
    if kind is ModelKind.TWO_MODE:
        big = squeezing(spec, free)
        return -omega + 2 * (n + spec.value("q")) * omega * big
    if kind is ModelKind.GENERALIZED:
        const = generalized_constants(spec, free)
        return omega * (n - const["h"] * const["kappa"] ** 2)

    g = spec.value("g", free)
    energy = n * omega - g**2 / omega
    if kind is ModelKind.DRIVEN:
        energy = energy + spec.branch * spec.value("delta_drive", free)
    return energy


def build_ode(spec, n=None, free=None):
    """Operator of the model. With n the baseline energy is substituted.

    Two-photon and two-mode operators are built in the scaled coordinate
    and mapped back to the Bargmann coordinate when g has a value"""

    free = spec.free_parameters() if free is None else tuple(free)
    terms = _BUILDERS[spec.kind](spec, free)
    meta = {"model": spec.name, "coordinate": "z"}
    op = OdeOperator(terms, meta)

    if spec.kind in (ModelKind.TWO_PHOTON, ModelKind.TWO_MODE):
        if spec.scaled:
            op.meta["coordinate"] = "x"
        else:
            op = op.rescale(1 / spec.value("g"))

    if spec.shift:
        op = op.translate(spec.shift)
    if n is not None:
        op = op.substitute(ENERGY, baseline_energy(spec, n, free))
    return op
