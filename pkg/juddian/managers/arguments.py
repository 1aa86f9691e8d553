# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Merge of the command line options, the model config and the profile
into one run configuration"""

from dataclasses import dataclass, field, replace
from typing import Optional

import click

from juddian import util
from juddian.managers.project import RUN_OPTIONS, Project
from juddian.models.spec import ModelSpec
from juddian.verification import Tolerances

# -- Arithmetic modes
MODES = ("exact", "numeric")


@dataclass(frozen=True)
class RunConfig:
    """Everything a pipeline step needs"""

    spec: ModelSpec
    mode: str = "exact"
    tolerances: Tolerances = field(default_factory=Tolerances)
    grid: int = 1000
    workers: int = 1
    seed: int = 0
    verbose: int = 0
    out: Optional[str] = None

    @property
    def exact(self):
        """Exact arithmetic requested"""
        return self.mode == "exact"


def _profile_defaults(profile):
    return {
        "mode": profile.get("mode"),
        "tol": profile.get("residual_tol"),
        "grid": profile.get("grid"),
        "workers": profile.get("workers"),
        "seed": profile.get("seed"),
    }


def _merge(args, run, defaults):
    """Command line > model config > profile. Equal values given twice
    are reported, conflicting ones resolved for the command line"""

    values = dict(defaults)
    values.update({k: v for k, v in run.items() if v is not None})

    redundant_arguments = []
    for name in RUN_OPTIONS:
        value = args.get(name)
        if value is None:
            continue
        if name in run:
            if run[name] == value:
                redundant_arguments += [name]
            else:
                click.secho(
                    f"Info: ignore {name} of the model config", fg="yellow"
                )
        values[name] = value

    if redundant_arguments:
        warning_str = ", ".join(redundant_arguments)
        click.secho(
            f"Warning: redundant arguments: {warning_str}", fg="yellow"
        )
    return values


def process_arguments(args, profile, project=None):
    """RunConfig from the command options `args`"""

    args = args or {}
    project = project or Project(args.get("config")).read()

    values = _merge(args, project.run, _profile_defaults(profile))

    mode = values["mode"]
    if mode not in MODES:
        raise util.ConfigError(
            f"unknown mode '{mode}': use {' or '.join(MODES)}"
        )

    grid = int(values["grid"])
    if grid < 2:
        raise util.ConfigError(f"sweep grid needs 2 points at least: {grid}")
    workers = int(values["workers"])
    if workers < 1:
        raise util.ConfigError(f"workers must be positive: {workers}")

    tol = float(values["tol"])
    if not tol > 0:
        raise util.ConfigError(f"tolerance must be positive: {tol}")
    tolerances = replace(Tolerances.from_profile(profile), residual=tol)

    verbose = args.get("verbose")
    verbose = profile.get_verbose_mode() if not verbose else 1

    return RunConfig(
        spec=ModelSpec.from_config(project.model),
        mode=mode,
        tolerances=tolerances,
        grid=grid,
        workers=workers,
        seed=int(values["seed"]),
        verbose=verbose,
        out=args.get("out"),
    )
