"""Resources module"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

# ---------- RESOURCES

# ---------------------------------------
# ---- File: resources/models.json
# --------------------------------------
# -- Catalogue of the supported models: description, required and
# -- optional config fields, the parameters that can be swept, the
# -- default sweep, the highest grade and the available oracles.
# -- This information is accessed through the Resources.models attribute

import json
from collections import OrderedDict
import shutil
import click

from juddian import util

# -- Info message
MODELS_MSG = (
    """
Use `juddian init --model <name>` to create a model config """
    """file for that model"""
)


class Resources:
    """Resource manager. Class for accessing all the resources"""

    def __init__(self):
        # -- Read the model catalogue
        self.models = self._load_resource("models")

        self.models = OrderedDict(
            sorted(self.models.items(), key=lambda t: t[0])
        )

    @staticmethod
    def _load_resource(name):
        """Load the resources from a given json file
        * Name: Name of the file without extension:
         * models: Load the model catalogue
        """

        # -- Build the filepath: Ex. resources/models.json
        filepath = util.get_full_path("resources") / f"{name}.json"

        # -- Open the json file and convert it to an object
        with filepath.open(encoding="utf8") as file:
            resource = json.loads(file.read(), object_pairs_hook=OrderedDict)

        return resource

    def get_model(self, name):
        """Catalogue entry of a model, ConfigError for unknown names"""

        if name not in self.models:
            raise util.ConfigError(
                f"unknown model '{name}'. "
                "Use `juddian models --list` for the supported models"
            )
        return self.models[name]

    def list_models(self):
        """Print a table with all the supported models"""

        # Print table
        click.echo("\nSupported models:\n")

        model_list_tpl = "{model:25} {gamma:<6} {sweep:18} {description}"
        terminal_width, _ = shutil.get_terminal_size()

        click.echo("-" * terminal_width)
        click.echo(
            model_list_tpl.format(
                model=click.style("Model", fg="cyan"),
                gamma="Grade",
                sweep="Sweep",
                description="Description",
            )
        )
        click.echo("-" * terminal_width)

        for name, model in self.models.items():
            click.echo(
                model_list_tpl.format(
                    model=click.style(name, fg="cyan"),
                    gamma=model.get("gamma"),
                    sweep=", ".join(model.get("sweep")),
                    description=model.get("description"),
                )
            )

        click.secho(MODELS_MSG, fg="green")

    def list_fields(self, name):
        """Print the config fields of one model"""

        model = self.get_model(name)
        click.secho(f"\n{name}: {model.get('description')}\n", fg="cyan")
        click.echo("Required: " + ", ".join(model.get("required")))
        click.echo("Optional: " + ", ".join(model.get("optional")))
        click.echo("Sweep:    " + ", ".join(model.get("sweep")))
