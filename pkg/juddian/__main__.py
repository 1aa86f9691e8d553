"""Juddian command line entry point"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

import click

from juddian import util


# -- Get the commands folder
commands_folder = util.get_full_path("commands")

# -- Commands of every help section
PIPELINE_COMMANDS = ["slice", "baseline", "constraint", "roots", "sweep"]
SETUP_COMMANDS = ["init", "config"]
UTILITY_COMMANDS = ["models", "verify"]


def find_commands_help(help_list, commands):
    """Lines of the help text that describe the given commands"""

    commands_help = []
    for line in help_list:
        for command in commands:
            if line.strip().startswith(f"{command} "):
                commands_help.append(line)
    return commands_help


class JuddianCLI(click.MultiCommand):
    """Every python file in the commands folder is a command"""

    def list_commands(self, ctx):
        cmd_list = [
            element.stem
            for element in commands_folder.iterdir()
            if element.is_file()
            and element.suffix == ".py"
            and element.stem != "__init__"
        ]

        cmd_list.sort()
        return cmd_list

    # -- Return the cli function of the command file
    def get_command(self, ctx, cmd_name: str):
        nnss = {}

        filename = commands_folder / f"{cmd_name}.py"

        if filename.exists():
            with filename.open(encoding="utf8") as file:
                code = compile(file.read(), filename, "exec")

                # pylint: disable=W0123
                eval(code, nnss, nnss)

        return nnss.get("cli")


@click.command(cls=JuddianCLI, invoke_without_command=True)
@click.pass_context
@click.version_option()
def cli(ctx):
    """Polynomial solutions of Rabi-type equations."""

    # -- No command typed: show help
    if ctx.invoked_subcommand is None:
        _help = ctx.get_help().split("\n")

        sections = [
            ("Pipeline commands", PIPELINE_COMMANDS),
            ("Setup commands", SETUP_COMMANDS),
            ("Utility commands", UTILITY_COMMANDS),
        ]

        # -- Commands are listed by section instead of in one block
        head = _help[: _help.index("Commands:")]
        text = "\n".join(head)
        for title, commands in sections:
            text += f"\n{title}:\n"
            text += "\n".join(find_commands_help(_help, commands))
            text += "\n"

        click.secho(text)
