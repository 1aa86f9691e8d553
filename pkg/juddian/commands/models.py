# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Supported models"""

import click

from juddian import util
from juddian.resources import Resources


@click.command("models")
@click.pass_context
@click.option("-l", "--list", is_flag=True, help="List all supported models.")
@click.option(
    "-f",
    "--fields",
    type=str,
    metavar="model",
    help="Show the config fields of a model.",
)
# pylint: disable=redefined-builtin,
def cli(ctx, list, fields):
    """Show the model catalogue."""

    if list:
        Resources().list_models()
    elif fields:
        try:
            Resources().list_fields(fields)
        except util.JuddianException as exc:
            click.secho("Error: " + str(exc), fg="red")
            ctx.exit(exc.EXIT_CODE)
    else:
        click.secho(ctx.get_help())
