# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Profile defaults"""

import click

from juddian.profile import Profile


# pylint: disable=W0622
@click.command("config")
@click.pass_context
@click.option(
    "-l", "--list", is_flag=True, help="List all configuration parameters."
)
@click.option(
    "-m",
    "--mode",
    type=click.Choice(["exact", "numeric"]),
    help="Default arithmetic.",
)
@click.option(
    "-v",
    "--verbose",
    type=click.Choice(["0", "1"]),
    help="Verbose mode: `0` General, `1` Certificates.",
)
@click.option(
    "-w",
    "--workers",
    type=click.IntRange(min=1),
    help="Default number of sweep workers.",
)
def cli(ctx, list, mode, verbose, workers):
    """Juddian configuration."""

    if list:
        Profile().list()
    elif mode:
        Profile().add_config("mode", mode)
    elif verbose:
        Profile().add_config("verbose", verbose)
    elif workers:
        Profile().add_config("workers", workers)
    else:
        click.secho(ctx.get_help())
