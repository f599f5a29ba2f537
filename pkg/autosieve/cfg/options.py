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

"""Program options: tolerances, calibrated constants and run settings."""

import collections
import typing as T
from pathlib import Path

import yaml

from autosieve.cfg.base import ConfigError, SubConfig
from autosieve.data import DATA_DIR


def _get_user_path(root_dir: Path) -> Path:
    return root_dir / "options.yaml"


class OptionsConfig(SubConfig):
    """Program options.

    The built-in options.yaml defines every valid key; user files may only
    override them.
    """

    def __init__(self) -> None:
        """Initialize self."""
        super().__init__()
        self._storage: T.Dict[str, T.Any] = {}
        self.load(None)

    def load(self, root_dir: T.Optional[Path]) -> None:
        """Load internals of this config from the specified directory.

        :param root_dir: directory where to look for the matching config
            file, None to use the built-in defaults only
        """
        self._storage = {}
        self._merge(
            self._storage,
            yaml.load(
                (DATA_DIR / "options.yaml").read_text(),
                Loader=yaml.SafeLoader,
            ),
            strict=False,
        )
        if root_dir:
            user_path = _get_user_path(root_dir)
            if user_path.exists():
                try:
                    self._loads(user_path.read_text())
                except (ConfigError, yaml.YAMLError) as ex:
                    raise ConfigError(f"error loading {user_path}: {ex}")

    def _loads(self, text: str) -> None:
        data = yaml.load(text, Loader=yaml.SafeLoader) or {}
        if not isinstance(data, collections.abc.Mapping):
            raise ConfigError("options must be a mapping")
        self._merge(self._storage, data, strict=True)

    def _merge(
        self, target: T.Any, source: T.Any, strict: bool, path: str = ""
    ) -> T.Any:
        for key, value in source.items():
            if strict and key not in target:
                raise ConfigError(f'unknown option "{path}{key}"')
            if isinstance(value, collections.abc.Mapping):
                target[key] = self._merge(
                    target.get(key, {}), value, strict, f"{path}{key}."
                )
            else:
                target[key] = value
        return target

    def override_tolerance(self, name: str, value: float) -> None:
        """Replace one entry of the tolerances section.

        :param name: tolerance name
        :param value: new value
        """
        if name not in self._storage["tolerances"]:
            raise ConfigError(f'unknown tolerance "{name}"')
        self._storage["tolerances"][name] = float(value)

    def __getitem__(self, key: T.Any) -> T.Any:
        """Return given configuration item.

        :param key: key to retrieve
        :return: configuration value
        """
        return self._storage[key]

    def __contains__(self, key: T.Any) -> bool:
        """Checks if a given key exists.

        :param key: key to check
        :return: whether the key exists
        """
        return key in self._storage

    def get(self, key: T.Any, default: T.Any = None) -> T.Any:
        """Return given configuration item if it exists, default value
        otherwise.

        :param key: key to retrieve
        :param default: value to return if the key does not exist
        :return: configuration value
        """
        return self._storage.get(key, default)
