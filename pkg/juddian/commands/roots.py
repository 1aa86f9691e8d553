# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Certified Juddian points"""

import click

from juddian.managers.pipeline import Pipeline


# R0913: Too many arguments
# pylint: disable=R0913
# pylint: disable=R0801
@click.command("roots")
@click.pass_context
@click.option(
    "-c",
    "--config",
    type=str,
    metavar="path",
    help="Model config file (default: juddian.json).",
)
@click.option(
    "-m",
    "--mode",
    type=click.Choice(["exact", "numeric"]),
    help="Arithmetic of the search.",
)
@click.option(
    "-o",
    "--out",
    type=str,
    metavar="path",
    help="Solution file (.json) or table (.csv).",
)
@click.option(
    "--tol", type=float, metavar="tol", help="Relative residual tolerance."
)
@click.option(
    "--grid", type=int, metavar="points", help="Sample points of numeric mode."
)
@click.option(
    "-v", "--verbose", is_flag=True, help="Show every certificate."
)
def cli(ctx, config, mode, out, tol, grid, verbose):
    """Find and certify the Juddian points."""

    exit_code = Pipeline().roots(
        {
            "config": config,
            "mode": mode,
            "out": out,
            "tol": tol,
            "grid": grid,
            "verbose": verbose,
        }
    )
    ctx.exit(exit_code)
