"""Run defaults stored in the juddian profile"""
# -*- coding: utf-8 -*-
# -- This file is part of the Juddian project
# -- (C) 2024 The Juddian developers
# -- Licence GPLv2

import json
from pathlib import Path
from os.path import isfile
import click

from juddian import util

# -- Built-in defaults of every run option
DEFAULT_CONFIG = {
    "mode": "exact",
    "residual_tol": 1e-10,
    "bethe_tol": 1e-8,
    "sum_rule_tol": 1e-9,
    "grid": 1000,
    "workers": 1,
    "seed": 0,
    "verbose": 0,
}

# -- Type of every option, used when reading values from the command line
CONFIG_TYPES = {
    "mode": str,
    "residual_tol": float,
    "bethe_tol": float,
    "sum_rule_tol": float,
    "grid": int,
    "workers": int,
    "seed": int,
    "verbose": int,
}


class Profile:
    """Class for managing the juddian profile file"""

    def __init__(self):
        # ---- Set the default parameters
        self.config = dict(DEFAULT_CONFIG)

        self.labels = {
            "mode": "Arithmetic mode",
            "residual_tol": "Residual tolerance",
            "bethe_tol": "Bethe tolerance",
            "sum_rule_tol": "Sum rule tolerance",
            "grid": "Sweep grid",
            "workers": "Workers",
            "seed": "Seed",
            "verbose": "Verbose",
        }

        # -- Get the profile path
        self._profile_path = str(Path(util.get_home_dir()) / "profile.json")

        # -- Read the profile from file
        self.load()

    def add_config(self, key, value):
        """Store an option, reporting whether it changed"""

        if key not in DEFAULT_CONFIG:
            raise util.ConfigError(f"unknown profile option '{key}'")

        value = CONFIG_TYPES[key](value)
        if self.config.get(key, None) != value:
            self.config[key] = value
            self.save()
            click.secho(
                f"{self.labels.get(key, key)} updated: {value}",
                fg="green",
            )
        else:
            click.secho(
                f"{self.labels.get(key, key)} already {value}",
                fg="yellow",
            )

    def get(self, key):
        """Stored value, or the built-in default"""
        return self.config.get(key, DEFAULT_CONFIG.get(key))

    def get_verbose_mode(self):
        """Verbosity level"""

        return int(self.config.get("verbose", 0))

    def load(self):
        """Load the profile from the file"""

        # -- Check if the file exist
        if isfile(self._profile_path):
            # -- Open the profile file
            with open(self._profile_path, "r", encoding="utf8") as profile:
                # -- Read the profile file
                self._load_profile(profile)

    def _load_profile(self, profile):
        """Read the profile file
        profile: file descriptor
        """

        try:
            data = json.load(profile)
        except json.JSONDecodeError as exc:
            raise util.ConfigError(
                f"corrupted profile {self._profile_path}: {exc}"
            ) from exc

        # -- Unknown keys are dropped, missing keys take the defaults
        if "config" in data.keys():
            stored = data.get("config")
            for key in DEFAULT_CONFIG:
                if key in stored:
                    self.config[key] = stored[key]

    def save(self):
        """Write the profile"""

        util.mkdir(self._profile_path)
        with open(self._profile_path, "w", encoding="utf8") as profile:
            data = {"config": self.config}
            json.dump(data, profile, indent=4, sort_keys=True)

    def list(self):
        """Print every option"""

        for key in self.config:
            click.secho(
                f"{self.labels.get(key, key)}: {self.config.get(key, '')}",
                fg="yellow",
            )
