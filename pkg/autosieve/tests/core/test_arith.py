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

"""Tests for autosieve.core.arith module."""

import math

import numpy as np
import pytest

from autosieve.core.arith import (
    CHEBYSHEV_PSI,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    primes_up_to,
    von_mangoldt_array,
)


def test_primes_up_to() -> None:
    """Test the sieve on small bounds."""
    assert primes_up_to(1) == ()
    assert primes_up_to(2) == (2,)
    assert primes_up_to(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
    assert len(primes_up_to(10 ** 4)) == 1229


@pytest.mark.parametrize(
    "value,expected",
    [
        (1, []),
        (2, [(2, 1)]),
        (12, [(2, 2), (3, 1)]),
        (97, [(97, 1)]),
        (360, [(2, 3), (3, 2), (5, 1)]),
        (2 ** 10 * 7, [(2, 10), (7, 1)]),
    ],
)
def test_factorize(value: int, expected: list) -> None:
    """Test trial division.

    :param value: integer to factor
    :param expected: expected (prime, exponent) pairs
    """
    assert factorize(value) == expected


def test_factorize_rejects_nonpositive() -> None:
    """Test that zero has no factorization."""
    with pytest.raises(ValueError):
        factorize(0)


def test_is_prime() -> None:
    """Test primality against the sieve."""
    primes = set(primes_up_to(200))
    assert all(is_prime(n) == (n in primes) for n in range(-3, 201))


@pytest.mark.parametrize(
    "value,expected", [(1, 1), (9, 6), (10, 4), (12, 4), (97, 96)]
)
def test_euler_phi(value: int, expected: int) -> None:
    """Test the totient.

    :param value: argument
    :param expected: expected totient
    """
    assert euler_phi(value) == expected


def test_divisors() -> None:
    """Test divisor enumeration."""
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_von_mangoldt() -> None:
    """Test von Mangoldt's function and Chebyshev's bound."""
    table = von_mangoldt_array(100)
    assert table[1] == 0
    assert table[6] == 0
    assert table[8] == pytest.approx(math.log(2))
    assert table[97] == pytest.approx(math.log(97))
    psi = np.cumsum(von_mangoldt_array(10 ** 4))
    assert np.all(psi[1:] < CHEBYSHEV_PSI * np.arange(1, 10 ** 4 + 1))
