# autosieve - large sieve and zero density toolkit
# Copyright (C) 2024 autosieve contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""Core API.

Encapsulates the program state shared by commands and offers simple
interfaces to it.
"""

import argparse
import os
import typing as T
from pathlib import Path

import autosieve.api.cmd
from autosieve.api.log import LogApi
from autosieve.api.report import ReportApi
from autosieve.api.threading import ThreadingApi
from autosieve.api.zeros import ZerosApi
from autosieve.cfg import Config, ConfigError

THREADS_ENV = "AUTOSIEVE_THREADS"


def parse_tolerance(text: str) -> T.Tuple[str, float]:
    """Parse a NAME=VALUE tolerance override.

    :param text: override as given on the command line
    :return: name and value
    """
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise ConfigError(f'tolerance override "{text}" is not NAME=VALUE')
    try:
        return name.strip(), float(value)
    except ValueError as ex:
        raise ConfigError(f'tolerance "{name}" is not a number') from ex


def resolve_threads(args: argparse.Namespace, cfg: Config) -> int:
    """Return the worker count: flag, then environment, then config.

    :param args: CLI arguments
    :param cfg: program configuration
    :return: positive worker count
    """
    value: T.Any = getattr(args, "threads", None)
    if value is None:
        value = os.environ.get(THREADS_ENV) or cfg.opt["basic"]["threads"]
    try:
        threads = int(value)
    except ValueError as ex:
        raise ConfigError(f'invalid thread count "{value}"') from ex
    if threads < 1:
        raise ConfigError(f"thread count must be positive, got {threads}")
    return threads


class Api:
    """Core class grouping all descendant APIs."""

    def __init__(self, args: argparse.Namespace) -> None:
        """Initialize self.

        :param args: CLI arguments
        """
        self.args = args

        self.cfg = Config()
        if not getattr(args, "no_config", True):
            self.cfg.load(Config.DEFAULT_PATH)
        for override in getattr(args, "tolerance", None) or []:
            self.cfg.opt.override_tolerance(*parse_tolerance(override))

        self.log = LogApi(self.cfg)
        self.threading = ThreadingApi(
            self.log, max_workers=resolve_threads(args, self.cfg)
        )
        self.zeros = ZerosApi(
            self.cfg,
            self.log,
            self.threading,
            use_cache=not getattr(args, "no_cache", False),
        )
        out = getattr(args, "out", None)
        self.report = ReportApi(
            self.cfg, self.log, out=Path(out) if out else None
        )
        self.cmd = autosieve.api.cmd.CommandApi(self)

    @property
    def seed(self) -> int:
        """Return the run seed.

        :return: seed given on the command line, 0 by default
        """
        seed = getattr(self.args, "seed", None)
        return 0 if seed is None else int(seed)

    def shutdown(self) -> None:
        """Release the worker pool."""
        self.threading.shutdown()
