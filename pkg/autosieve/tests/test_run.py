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

"""Basic program installation test for CI."""

import subprocess

import pytest

TIMEOUT = 30


@pytest.mark.ci
def test_run() -> None:
    """Test if autosieve is able to run.

    This test is supposed to be used within Docker.
    """
    result = subprocess.run(
        ["autosieve", "--no-config", "--no-cache", "help"],
        timeout=TIMEOUT,
        stderr=subprocess.PIPE,
        stdout=subprocess.PIPE,
        check=False,
    )
    assert result.returncode == 0, f"Failed: {result.stderr!s}"
    assert b"verify-cauchy" in result.stderr
