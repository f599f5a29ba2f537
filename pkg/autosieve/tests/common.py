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

"""Shared utility functions for tests."""

import argparse
import typing as T
from pathlib import Path

import pytest

from autosieve.api import Api

APP_ROOT_DIR = Path(__file__).parent.parent
TESTS_ROOT_DIR = APP_ROOT_DIR / "tests"


def collect_source_files(root: Path = APP_ROOT_DIR) -> T.Iterable[Path]:
    """Return source files belonging to autosieve.

    :param root: root dir, defaulting to the whole project
    :return: generator of paths
    """
    for path in root.iterdir():
        if path.is_dir():
            yield from collect_source_files(path)
        elif path.is_file() and path.suffix == ".py":
            yield path


def make_args(**kwargs: T.Any) -> argparse.Namespace:
    """Return CLI arguments isolated from the user configuration.

    :return: namespace
    """
    args = argparse.Namespace(
        no_config=True, no_cache=True, threads=1, seed=0, out=None
    )
    for key, value in kwargs.items():
        setattr(args, key, value)
    return args


@pytest.fixture
def api() -> T.Iterator[Api]:
    """Return core API instance for testing purposes.

    :return: core API
    """
    ret = Api(make_args())
    yield ret
    ret.cmd.unload()
    ret.shutdown()
