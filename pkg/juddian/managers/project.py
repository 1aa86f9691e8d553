# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2
"""Model config files: reading them and writing templates"""

import json
from os.path import isfile
from pathlib import Path

import click

from juddian import util
from juddian.resources import Resources

# -- Optional object of a model config holding run options
RUN_SECTION = "run"

# -- Run options a model config may set
RUN_OPTIONS = ("mode", "tol", "grid", "workers", "seed")


class Project:
    """A model config file"""

    def __init__(self, path=None):
        self.path = Path(path or util.CONFIG_FILENAME)
        self.model = None
        self.run = {}

    def read(self):
        """Read the config file. The `run` object is split off from the
        model fields"""

        if not isfile(self.path):
            raise util.ConfigError(f"no model config file: {self.path}")

        with open(self.path, "r", encoding="utf8") as file:
            try:
                data = json.load(file)
            except json.JSONDecodeError as exc:
                raise util.ConfigError(
                    f"malformed JSON in {self.path}: {exc}"
                ) from exc

        if not isinstance(data, dict):
            raise util.ConfigError(f"{self.path}: expected a JSON object")

        run = data.pop(RUN_SECTION, {})
        if not isinstance(run, dict):
            raise util.ConfigError(f"'{RUN_SECTION}' must be an object")
        unknown = sorted(set(run) - set(RUN_OPTIONS))
        if unknown:
            raise util.ConfigError(
                f"unknown run option(s): {', '.join(unknown)}"
            )

        self.model = data
        self.run = run
        return self

    def create_config(self, model, project_dir="", sayyes=False):
        """Write a template config for the given model"""

        project_dir = util.check_dir(project_dir)
        config_path = Path(project_dir) / self.path.name
        template = Resources().get_model(model).get("example")

        if isfile(config_path):
            # -- If sayyes, skip the question
            if sayyes:
                self._create_config_file(model, template, config_path)
            else:
                click.secho(
                    f"Warning: {config_path.name} file already exists",
                    fg="yellow",
                )
                if click.confirm("Do you want to replace it?"):
                    self._create_config_file(model, template, config_path)
                else:
                    click.secho("Abort!", fg="red")
        else:
            self._create_config_file(model, template, config_path)

    @staticmethod
    def _create_config_file(model, template, config_path):
        click.secho(f"Creating {config_path.name} file ...")
        config = {"model": model}
        config.update(template)
        with open(config_path, "w", encoding="utf8") as file:
            json.dump(config, file, indent=4)
            file.write("\n")
        click.secho(
            f"File '{config_path.name}' has been successfully created!",
            fg="green",
        )
