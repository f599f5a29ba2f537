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

"""Tests for autosieve.cmd.common.path module."""

from pathlib import Path

import pytest

from autosieve.api.cmd import CommandUnavailable
from autosieve.cmd.common.path import FancyPath


def test_load_path(tmp_path: Path) -> None:
    """Test that missing input files are reported.

    :param tmp_path: temporary directory
    """
    path = tmp_path / "family.json"
    with pytest.raises(CommandUnavailable):
        FancyPath(str(path)).get_load_path()
    path.write_text("{}")
    assert FancyPath(str(path)).get_load_path() == path


def test_save_paths(tmp_path: Path) -> None:
    """Test that save locations get their directories.

    :param tmp_path: temporary directory
    """
    target = FancyPath(str(tmp_path / "a" / "family.json")).get_save_path()
    assert target.parent.is_dir()
    assert not target.exists()
    directory = FancyPath(str(tmp_path / "b" / "zeros")).get_save_dir()
    assert directory.is_dir()
