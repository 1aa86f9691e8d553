# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Constraint polynomials of a baseline"""

import click

from juddian.managers.pipeline import Pipeline


@click.command("constraint")
@click.pass_context
@click.option(
    "-c",
    "--config",
    type=str,
    metavar="path",
    help="Model config file (default: juddian.json).",
)
@click.option(
    "-o", "--out", type=str, metavar="path", help="Write JSON to a file."
)
def cli(ctx, config, out):
    """Compute the constraint polynomials."""

    exit_code = Pipeline().constraint({"config": config, "out": out})
    ctx.exit(exit_code)
