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

"""Tests for autosieve.core.ideals module."""

import pytest

from autosieve.core.ideals import (
    FieldSpec,
    IdealFactorization,
    PrimeIdeal,
    ideals_up_to,
    parse_prime_key,
)
from autosieve.errors import MissingSplittingData


def gaussian_field() -> FieldSpec:
    """Return Q(i) with splitting data for primes up to 13.

    :return: field
    """
    return FieldSpec(
        degree=2,
        discriminant_norm=4,
        real_places=0,
        complex_places=1,
        splitting={
            2: (PrimeIdeal(2),),
            3: (PrimeIdeal(3, 2),),
            5: (PrimeIdeal(5), PrimeIdeal(5, 1, 1)),
            7: (PrimeIdeal(7, 2),),
            11: (PrimeIdeal(11, 2),),
            13: (PrimeIdeal(13), PrimeIdeal(13, 1, 1)),
        },
    )


@pytest.mark.parametrize(
    "text,expected",
    [
        ("7", PrimeIdeal(7)),
        ("3^2", PrimeIdeal(3, 2)),
        ("5^1#1", PrimeIdeal(5, 1, 1)),
        (" 13#1 ", PrimeIdeal(13, 1, 1)),
    ],
)
def test_parse_prime_key(text: str, expected: PrimeIdeal) -> None:
    """Test parsing of prime ideal keys.

    :param text: key
    :param expected: expected prime ideal
    """
    assert parse_prime_key(text) == expected


@pytest.mark.parametrize("text", ["", "x", "4", "3^", "3^0", "3#"])
def test_parse_prime_key_rejects(text: str) -> None:
    """Test that malformed keys raise ValueError.

    :param text: key
    """
    with pytest.raises(ValueError):
        parse_prime_key(text)


def test_prime_ideal_ordering() -> None:
    """Test that prime ideals sort by norm first."""
    primes = [PrimeIdeal(3, 2), PrimeIdeal(5, 1, 1), PrimeIdeal(7)]
    primes.append(PrimeIdeal(5))
    assert sorted(primes) == [
        PrimeIdeal(5),
        PrimeIdeal(5, 1, 1),
        PrimeIdeal(7),
        PrimeIdeal(3, 2),
    ]
    assert PrimeIdeal(5, 1, 1).label == "5^1#1"


def test_ideal_arithmetic() -> None:
    """Test gcd, lcm, products and divisibility."""
    a = IdealFactorization.of_integer(12)
    b = IdealFactorization.of_integer(18)
    assert a.gcd(b) == IdealFactorization.of_integer(6)
    assert a.lcm(b) == IdealFactorization.of_integer(36)
    assert (a * b).norm == 216
    assert IdealFactorization.of_integer(6).divides(a)
    assert not a.divides(b)
    assert IdealFactorization.of_integer(5).coprime_to(a)
    assert not a.is_squarefree()
    assert IdealFactorization.unit().is_unit()
    assert IdealFactorization.unit().label == "O"


def test_ideal_rejects_repeated_prime() -> None:
    """Test that factorizations list each prime once."""
    with pytest.raises(ValueError):
        IdealFactorization(((PrimeIdeal(2), 1), (PrimeIdeal(2), 2)))


def test_ideals_up_to_rationals() -> None:
    """Test that ideals of Z are the positive integers."""
    ideals = ideals_up_to(FieldSpec.rationals(), 30)
    assert [ideal.norm for ideal in ideals] == list(range(1, 31))


def test_ideals_up_to_gaussian() -> None:
    """Test the ideal count of Z[i] against sums of two squares."""
    ideals = ideals_up_to(gaussian_field(), 13)
    norms = [ideal.norm for ideal in ideals]
    expected = [
        n
        for n in range(1, 14)
        for _ in range(
            sum(
                1
                for a in range(-4, 5)
                for b in range(-4, 5)
                if a * a + b * b == n
            )
            // 4
        )
    ]
    assert norms == expected
    assert norms.count(5) == 2
    assert norms.count(9) == 1


def test_missing_splitting_data() -> None:
    """Test that an incomplete splitting table is reported."""
    with pytest.raises(MissingSplittingData) as info:
        ideals_up_to(gaussian_field(), 17)
    assert info.value.prime == 17


def test_field_validation() -> None:
    """Test the place count invariant."""
    with pytest.raises(ValueError):
        FieldSpec(degree=2, real_places=1, complex_places=1)
