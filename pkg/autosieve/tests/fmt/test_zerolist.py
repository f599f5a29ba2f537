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

"""Tests for autosieve.fmt.zerolist module."""

import io
import json
from pathlib import Path

import pytest

from autosieve.fmt.zerolist import read_zero_list, write_zero_list
from autosieve.zero_lab.zeros import ZeroList


def test_read_zero_list() -> None:
    """Test reading a zero list with defaults."""
    zeros = read_zero_list(
        '{"box": [0, 10], "zeros": [[0.5, 8.04], [0.5, -8.04]]}'
    )
    assert zeros.provenance == "scanned"
    assert zeros.q == 1
    assert zeros.T == 10
    assert list(zeros) == [0.5 - 8.04j, 0.5 + 8.04j]


def test_write_zero_list(tmp_path: Path) -> None:
    """Test the stored layout and reading it back from a path.

    :param tmp_path: temporary directory
    """
    zeros = ZeroList(
        zeros=(0.5 + 6.02j, 0.5 - 6.02j),
        sigma_min=0.0,
        T=7.0,
        q=4,
        index=1,
    )
    handle = io.StringIO()
    write_zero_list(zeros, handle)
    data = json.loads(handle.getvalue())
    assert data["box"] == [0.0, 7.0]
    assert data["q"] == 4
    assert data["index"] == 1
    assert data["zeros"][0] == [0.5, -6.02]

    path = tmp_path / "zeros.json"
    path.write_text(handle.getvalue())
    assert read_zero_list(path) == zeros


@pytest.mark.parametrize(
    "text",
    [
        "[",
        '{"zeros": []}',
        '{"box": [0, 5], "zeros": [[0.5, 6]]}',
        '{"box": [0, 5], "zeros": [], "provenance": "guessed"}',
    ],
)
def test_read_corrupt_zero_list(text: str) -> None:
    """Test that corrupt zero lists are reported.

    :param text: file contents
    """
    with pytest.raises(ValueError, match="corrupt zero list"):
        read_zero_list(text)
