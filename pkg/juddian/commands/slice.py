# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Grade signature of a model operator"""

import click

from juddian.managers.pipeline import Pipeline


@click.command("slice")
@click.pass_context
@click.option(
    "-c",
    "--config",
    type=str,
    metavar="path",
    help="Model config file (default: juddian.json).",
)
@click.option(
    "-v", "--verbose", is_flag=True, help="Print the whole operator."
)
def cli(ctx, config, verbose):
    """Slice the operator into grades."""

    exit_code = Pipeline().slice({"config": config, "verbose": verbose})
    ctx.exit(exit_code)
