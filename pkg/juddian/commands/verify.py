# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Offline verification of a solution file"""

import click

from juddian.managers.pipeline import Pipeline


@click.command("verify")
@click.pass_context
@click.argument("solution", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--tol", type=float, metavar="tol", help="Relative residual tolerance."
)
@click.option(
    "--seed", type=int, metavar="seed", help="Seed of the probe points."
)
@click.option(
    "-o",
    "--out",
    type=str,
    metavar="path",
    help="Write the recomputed certificates to a file.",
)
def cli(ctx, solution, tol, seed, out):
    """Re-verify the certificates of a solution file."""

    exit_code = Pipeline().verify(
        {"solution": solution, "tol": tol, "seed": seed, "out": out}
    )
    ctx.exit(exit_code)
