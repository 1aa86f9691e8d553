# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Model config templates"""

import click

from juddian import util
from juddian.managers.project import Project


@click.command("init")
@click.pass_context
@click.option(
    "-m",
    "--model",
    type=str,
    metavar="model",
    help="Create a config file for the selected model.",
)
@click.option(
    "-p",
    "--project-dir",
    type=str,
    metavar="path",
    help="Set the target directory for the config file.",
)
@click.option(
    "-y",
    "--sayyes",
    is_flag=True,
    help="Automatically answer YES to all the questions.",
)
def cli(ctx, model, project_dir, sayyes):
    """Create a model config file."""

    if model:
        try:
            Project().create_config(model, project_dir, sayyes)
        except util.JuddianException as exc:
            click.secho("Error: " + str(exc), fg="red")
            ctx.exit(exc.EXIT_CODE)
    else:
        click.secho(ctx.get_help())
