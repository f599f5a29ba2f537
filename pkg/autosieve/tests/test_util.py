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

"""Tests for autosieve.util module."""

import pytest

from autosieve.util import eval_expr, integer, number


@pytest.mark.parametrize(
    "expr,expected",
    [
        ("42", 42),
        ("10**6", 10 ** 6),
        ("10^6", 10 ** 6),
        ("2^10 - 24", 1000),
        ("-3 * 2", -6),
        ("1e4", 1e4),
        ("1 / 4", 0.25),
        (" 7 ", 7),
    ],
)
def test_eval_expr(expr: str, expected: float) -> None:
    """Test evaluation of command line arithmetic.

    :param expr: input expression
    :param expected: expected value
    """
    assert eval_expr(expr) == expected


@pytest.mark.parametrize(
    "expr", ["", "x", "__import__('os')", "2 +", "abs(-1)", "[1]", "'a'"]
)
def test_eval_expr_rejects(expr: str) -> None:
    """Test that anything beyond arithmetic on literals is refused.

    :param expr: input expression
    """
    with pytest.raises(ValueError):
        eval_expr(expr)


def test_number() -> None:
    """Test that numbers come out as floats."""
    assert number("3") == 3.0
    assert isinstance(number("3"), float)


def test_integer() -> None:
    """Test integral parsing."""
    assert integer("10^5") == 100000
    assert integer("4.0") == 4
    with pytest.raises(ValueError):
        integer("2.5")
