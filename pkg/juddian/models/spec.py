"""Model descriptions read from the JSON model config"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

import dataclasses
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from juddian.util import ConfigError, format_rational, parse_rational
from juddian.algebra.poly import UniPoly
from juddian.algebra.roots import Interval
from juddian.resources import Resources


class ModelKind(Enum):
    """Supported models, by their config name"""

    RABI = "rabi"
    DRIVEN = "driven-rabi"
    TWO_PHOTON = "two-photon"
    TWO_MODE = "two-mode"
    GENERALIZED = "generalized-rabi"
    SCHWEBER = "schweber"
    KOC = "koc"


# -- Fields that are not numbers
_PLAIN_FIELDS = ("model", "n", "sweep", "branch", "degenerate")

# -- Parameters that must be nonnegative when swept
_NONNEGATIVE = ("g", "delta", "kappa")

# -- Parameters living in [0, 1]
_UNIT = ("Omega", "Lambda")


@dataclass(frozen=True)
class Sweep:
    """Swept parameter and the half-open domain (lo, hi]"""

    param: str
    lo: Fraction
    hi: Fraction

    @property
    def interval(self):
        """The domain as a root isolation interval"""
        return Interval.half_open(self.lo, self.hi)

    def grid(self, points):
        """t_i = lo + (i+1)(hi-lo)/points, i = 0 .. points-1"""

        if points < 2:
            raise ConfigError(f"sweep grid needs 2 points at least: {points}")
        step = (self.hi - self.lo) / points
        return [self.lo + (i + 1) * step for i in range(points)]


@dataclass(frozen=True)
class ModelSpec:
    """A model with its parameter values.
    The swept parameter, when there is one, has no value"""

    kind: ModelKind
    params: dict = field(default_factory=dict)
    n: Optional[int] = None
    branch: int = 1
    sweep: Optional[Sweep] = None
    shift: Fraction = Fraction(0)
    degenerate: bool = False
    source: dict = field(default_factory=dict, compare=False, repr=False)

    # -- Construction
    @classmethod
    def from_config(cls, config, resources=None):
        """Validated spec from a parsed JSON model config"""

        if not isinstance(config, dict):
            raise ConfigError("the model config must be a JSON object")
        if "model" not in config:
            raise ConfigError("missing field 'model'")

        resources = resources or Resources()
        entry = resources.get_model(config["model"])
        kind = ModelKind(config["model"])

        allowed = (
            set(entry["required"])
            | set(entry["optional"])
            | set(entry["sweep"])
            | set(_PLAIN_FIELDS)
        )
        unknown = sorted(set(config) - allowed)
        if unknown:
            raise ConfigError(
                f"unknown field(s) for {kind.value}: {', '.join(unknown)}"
            )

        sweep = _read_sweep(config.get("sweep"), entry)
        degenerate = _read_flag(config.get("degenerate", False))

        # -- A swept parameter may stand in for a required one
        replaces = entry.get("replaces", {})
        present = set(config)
        if sweep:
            present.add(sweep.param)
        for name, target in replaces.items():
            if name in present:
                present.add(target)

        required = list(entry["required"])
        if kind is ModelKind.GENERALIZED and degenerate:
            required.remove("delta")
        missing = [name for name in required if name not in present]
        if missing:
            raise ConfigError(
                f"missing field(s) for {kind.value}: {', '.join(missing)}"
            )

        params = {}
        for name, value in config.items():
            if name in _PLAIN_FIELDS:
                continue
            params[name] = parse_rational(value, name)
        shift = params.pop("shift", Fraction(0))

        # -- The swept value is dropped. A replaced parameter goes too
        if sweep:
            params.pop(sweep.param, None)
            if sweep.param in replaces:
                params.pop(replaces[sweep.param], None)
        for name, target in replaces.items():
            if name in params:
                params.pop(target, None)

        spec = cls(
            kind=kind,
            params=params,
            n=_read_degree(config.get("n")),
            branch=_read_branch(config.get("branch", "+")),
            sweep=sweep,
            shift=shift,
            degenerate=degenerate,
            source=dict(config),
        )
        spec.check()
        return spec

    # -- Invariants
    def check(self):
        """Raise ConfigError on a violated model invariant"""

        params = self.params

        def positive(name):
            if name in params and params[name] <= 0:
                raise ConfigError(f"{name} must be positive: {params[name]}")

        positive("omega")
        if not (self.kind is ModelKind.GENERALIZED and self.degenerate):
            positive("delta")

        if self.sweep and self.sweep.param in _NONNEGATIVE:
            if self.sweep.lo < 0:
                raise ConfigError(
                    f"sweep of {self.sweep.param} must stay nonnegative"
                )
        if self.sweep and self.sweep.param in _UNIT:
            if self.sweep.lo < 0 or self.sweep.hi > 1:
                raise ConfigError(
                    f"sweep of {self.sweep.param} must stay in [0, 1]"
                )

        if self.kind is ModelKind.TWO_PHOTON:
            self._check_squeezing(2, "|2g/omega| < 1")
            if params.get("q") not in (Fraction(1, 4), Fraction(3, 4)):
                raise ConfigError("two-photon q must be 1/4 or 3/4")

        if self.kind is ModelKind.TWO_MODE:
            self._check_squeezing(1, "|g/omega| < 1")
            q = params.get("q")
            if q is None or q <= 0 or (2 * q).denominator != 1:
                raise ConfigError("two-mode q must be a positive half-integer")

        if self.kind is ModelKind.GENERALIZED:
            g1, g2 = params["g1"], params["g2"]
            if g1 * g2 <= 0:
                raise ConfigError("generalized Rabi needs g1*g2 > 0")
            if g1 == g2:
                raise ConfigError(
                    "generalized Rabi needs g1 != g2 (use the rabi model)"
                )
            if self.degenerate and g2 < g1:
                raise ConfigError(
                    "the degenerate branch nu = -kappa needs g2 > g1"
                )

    def _check_squeezing(self, factor, text):
        for name in _UNIT:
            if name in self.params:
                value = self.params[name]
                if not 0 < value <= 1:
                    raise ConfigError(f"{name} must lie in (0, 1]")
        if "g" not in self.params:
            return
        ratio = factor * self.params["g"] / self.params["omega"]
        if not abs(ratio) < 1:
            raise ConfigError(f"{self.kind.value} needs {text}")
        if ratio == 0:
            raise ConfigError(
                f"{self.kind.value} with g = 0 decouples; "
                "sweep the squeezing parameter instead"
            )

    # -- Access
    @property
    def name(self):
        """Model config name"""
        return self.kind.value

    @property
    def variable(self):
        """Name of the swept parameter, or None"""
        return self.sweep.param if self.sweep else None

    @property
    def scaled(self):
        """Two-photon and two-mode operators written in the scaled
        coordinate x = z/g, polynomial in the squeezing parameter"""

        return self.kind in (ModelKind.TWO_PHOTON, ModelKind.TWO_MODE) and (
            "g" not in self.params
        )

    def free_parameters(self):
        """Parameters kept symbolic by default"""
        return (self.sweep.param,) if self.sweep else ()

    def value(self, name, free=()):
        """Value of a parameter: a variable when free"""

        if name in free:
            return UniPoly.variable(name)
        if name not in self.params:
            raise ConfigError(f"parameter '{name}' has no value")
        return self.params[name]

    def with_value(self, name, value):
        """Copy with one more fixed parameter. Fixing the swept parameter
        removes the sweep"""

        params = dict(self.params)
        params[name] = value
        sweep = self.sweep if self.variable != name else None
        return dataclasses.replace(self, params=params, sweep=sweep)

    def with_degree(self, n):
        """Copy on another baseline"""
        return dataclasses.replace(self, n=n)

    def require_degree(self, n=None):
        """The baseline degree, from the argument or the config"""

        n = self.n if n is None else n
        if n is None:
            raise ConfigError("no baseline degree: set 'n' in the config")
        return n

    def require_sweep(self):
        """The sweep, ConfigError when there is none"""

        if not self.sweep:
            raise ConfigError(
                f"no sweep in the {self.name} config: "
                'add "sweep": {"param": ..., "min": ..., "max": ...}'
            )
        return self.sweep

    def to_config(self):
        """Canonical JSON config, exact values as p/q strings"""

        config = {"model": self.name}
        for name in sorted(self.params):
            config[name] = format_rational(self.params[name])
        if self.n is not None:
            config["n"] = self.n
        if self.kind is ModelKind.DRIVEN:
            config["branch"] = "+" if self.branch > 0 else "-"
        if self.degenerate:
            config["degenerate"] = True
        if self.shift:
            config["shift"] = format_rational(self.shift)
        if self.sweep:
            config["sweep"] = {
                "param": self.sweep.param,
                "min": format_rational(self.sweep.lo),
                "max": format_rational(self.sweep.hi),
            }
        return config


def _read_sweep(sweep, entry):
    if sweep is None:
        return None
    if not isinstance(sweep, dict):
        raise ConfigError("'sweep' must be an object {param, min, max}")
    for key in ("param", "min", "max"):
        if key not in sweep:
            raise ConfigError(f"sweep: missing '{key}'")
    param = sweep["param"]
    if param not in entry["sweep"]:
        raise ConfigError(
            f"sweep: '{param}' cannot be swept. "
            f"Choose one of: {', '.join(entry['sweep'])}"
        )
    lo = parse_rational(sweep["min"], "sweep.min")
    hi = parse_rational(sweep["max"], "sweep.max")
    if not lo < hi:
        raise ConfigError(f"sweep: min must be below max ({lo} >= {hi})")
    return Sweep(param, lo, hi)


def _read_degree(value):
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ConfigError(f"n must be a nonnegative integer: {value!r}")
    return value


def _read_branch(value):
    if value in ("+", 1, "+1"):
        return 1
    if value in ("-", -1, "-1"):
        return -1
    raise ConfigError(f"branch must be '+' or '-': {value!r}")


def _read_flag(value):
    if not isinstance(value, bool):
        raise ConfigError(f"expected true or false: {value!r}")
    return value
