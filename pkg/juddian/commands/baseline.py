# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Baseline energy and multiplicator table"""

import click

from juddian.managers.pipeline import Pipeline


@click.command("baseline")
@click.pass_context
@click.option(
    "-c",
    "--config",
    type=str,
    metavar="path",
    help="Model config file (default: juddian.json).",
)
def cli(ctx, config):
    """Show the baseline of the configured degree."""

    exit_code = Pipeline().baseline({"config": config})
    ctx.exit(exit_code)
