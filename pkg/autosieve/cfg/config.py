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

"""Program configuration."""

import typing as T
from pathlib import Path

from autosieve.cfg.options import OptionsConfig
from autosieve.data import PROGRAM_CONFIG_DIR


class Config:
    """Umbrella class containing all the configuration."""

    DEFAULT_PATH = PROGRAM_CONFIG_DIR

    def __init__(self) -> None:
        """Initialize self."""
        self.opt = OptionsConfig()
        self.root_dir: T.Optional[Path] = None

    def load(self, root_dir: T.Optional[Path]) -> None:
        """Load configuration from the specified path.

        :param root_dir: root directory to load the configuration from,
            None for the built-in defaults
        """
        self.root_dir = root_dir
        self.opt.load(root_dir)
