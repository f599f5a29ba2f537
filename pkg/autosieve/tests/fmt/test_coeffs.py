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

"""Tests for autosieve.fmt.coeffs module."""

import io
from pathlib import Path

import pytest

from autosieve.core.ideals import FieldSpec, IdealFactorization, PrimeIdeal
from autosieve.fmt.coeffs import (
    read_coefficients,
    read_norm_coefficients,
    spread_over_ideals,
    write_norm_coefficients,
)


def test_read_norm_coefficients() -> None:
    """Test reading rows with a header, comments and blank lines."""
    text = "norm,re,im\n1,1,0\n# comment\n\n4,0.5,-1\n"
    assert read_norm_coefficients(text) == {1: 1, 4: 0.5 - 1j}


def test_read_without_header() -> None:
    """Test that the header is optional."""
    assert read_norm_coefficients("2,0,1\n") == {2: 1j}


@pytest.mark.parametrize(
    "text,row", [("1,a,0\n", 1), ("norm,re,im\n1,0,0\n0,1,1\n", 3)]
)
def test_read_corrupt_coefficients(text: str, row: int) -> None:
    """Test that bad rows are reported with their position.

    :param text: file contents
    :param row: number of the bad row
    """
    with pytest.raises(ValueError, match=f"row #{row}"):
        read_norm_coefficients(text)


def test_spread_over_rationals() -> None:
    """Test that over Q every norm names one ideal."""
    coeffs = read_coefficients("1,1,0\n6,2,0\n")
    assert coeffs == {
        IdealFactorization.unit(): 1,
        IdealFactorization.of_integer(6): 2,
    }


def test_spread_over_gaussian_field() -> None:
    """Test that a split norm assigns the coefficient to both ideals."""
    field_spec = FieldSpec(
        degree=2,
        discriminant_norm=4,
        real_places=0,
        complex_places=1,
        splitting={
            2: (PrimeIdeal(2),),
            3: (PrimeIdeal(3, 2),),
            5: (PrimeIdeal(5), PrimeIdeal(5, 1, 1)),
        },
    )
    coeffs = spread_over_ideals({1: 1, 5: 2j}, field_spec)
    assert len(coeffs) == 3
    assert sorted(ideal.norm for ideal in coeffs) == [1, 5, 5]
    assert all(
        value == 2j for ideal, value in coeffs.items() if ideal.norm == 5
    )
    assert spread_over_ideals({}) == {}


def test_write_norm_coefficients(tmp_path: Path) -> None:
    """Test that written coefficients read back exactly.

    :param tmp_path: temporary directory
    """
    coeffs = {3: 1 / 3 + 0j, 1: complex(-0.1, 2 / 7)}
    handle = io.StringIO()
    write_norm_coefficients(coeffs, handle)
    assert handle.getvalue().splitlines()[:2] == [
        "norm,re,im",
        f"1,{-0.1!r},{2 / 7!r}",
    ]
    path = tmp_path / "coeffs.csv"
    path.write_text(handle.getvalue())
    assert read_norm_coefficients(path) == coeffs
