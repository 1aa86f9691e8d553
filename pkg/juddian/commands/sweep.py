# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Constraint values along the sweep"""

import click

from juddian.managers.pipeline import Pipeline


# R0913: Too many arguments
# pylint: disable=R0913
# pylint: disable=R0801
@click.command("sweep")
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
    help="Arithmetic of the evaluation.",
)
@click.option(
    "-o", "--out", type=str, metavar="path", help="Write CSV to a file."
)
@click.option("--grid", type=int, metavar="points", help="Grid points.")
@click.option(
    "-w", "--workers", type=int, metavar="n", help="Worker processes."
)
def cli(ctx, config, mode, out, grid, workers):
    """Tabulate the constraints on the sweep grid."""

    exit_code = Pipeline().sweep(
        {
            "config": config,
            "mode": mode,
            "out": out,
            "grid": grid,
            "workers": workers,
        }
    )
    ctx.exit(exit_code)
