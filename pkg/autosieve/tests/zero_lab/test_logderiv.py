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

"""Tests for autosieve.zero_lab.logderiv module."""

import math

import mpmath
import pytest

from autosieve.core.characters import DirichletCharacter, character_by_label
from autosieve.errors import PoleError
from autosieve.zero_lab.logderiv import (
    certified_tail,
    j_k,
    scaled_logderiv,
    window_logs,
)


def test_j_k() -> None:
    """Test the weights e^-u u^k / k!."""
    assert j_k(1.5, 0) == pytest.approx(math.exp(-1.5))
    assert j_k(2.0, 3) == pytest.approx(math.exp(-2) * 8 / 6)
    assert j_k(0.0, 2) == 0
    values = j_k([1.0, 4.0], 4)
    assert values[1] > values[0]


def test_window_logs() -> None:
    """Test the logarithms of the prime window ends."""
    low, high = window_logs(3, 0.1)
    assert low == pytest.approx(0.1)
    assert high == pytest.approx(1200)


def test_certified_tail_decreases() -> None:
    """Test that the tail bound shrinks as the cap grows."""
    tails = [certified_tail(3, 0.5, cap) for cap in (10 ** 4, 10 ** 5)]
    assert 0 < tails[1] < tails[0]


@pytest.mark.parametrize("k", [0, 2, 3])
def test_value_against_mpmath(k: int) -> None:
    """Test the Cauchy integral value against numerical differentiation.

    :param k: order of the derivative
    """
    chi = character_by_label("3.1")
    eta = 0.5
    report = scaled_logderiv(chi, k, eta, 2.0, cap=10 ** 4)
    s = complex(1 + eta, 2.0)
    expected = complex(
        mpmath.diff(
            lambda z: mpmath.log(mpmath.dirichlet(z, [0, 1, -1])), s, k + 1
        )
    ) * eta ** (k + 1) / math.factorial(k)
    assert abs(report.value - expected) <= 1e-8


@pytest.mark.parametrize("k", [1, 2, 4])
def test_series_within_tail(k: int) -> None:
    """Test that the truncated series misses the value by at most the tail.

    :param k: order of the derivative
    """
    chi = character_by_label("4.1")
    report = scaled_logderiv(chi, k, 0.5, 1.0, cap=10 ** 5)
    assert report.flags["tail_certified"]
    assert abs(report.value - report.series_value) <= (
        report.tail_bound + 1e-8
    )
    assert report.split.total == pytest.approx(
        report.split.window + report.split.outside + report.split.prime_powers
    )


def test_outside_window_ratios_decrease() -> None:
    """Test the outside-window mass against 110^-k for small eta."""
    chi = character_by_label("3.1")
    ratios = [
        scaled_logderiv(chi, k, 0.01, 0.0, K=4, cap=10 ** 4).outside_ratio
        for k in range(4, 11)
    ]
    assert all(ratio < 1 for ratio in ratios)
    assert all(b < a for a, b in zip(ratios, ratios[1:]))


def test_flags() -> None:
    """Test the regime and window flags."""
    report = scaled_logderiv(
        character_by_label("3.1"), 1, 0.5, 0.0, cap=10 ** 4
    )
    assert not report.flags["in_regime"]
    assert report.flags["window_truncated"]
    assert report.log_N0 == pytest.approx(1 / 150)


def test_rejects_principal_character() -> None:
    """Test that the pole of the trivial character is refused."""
    with pytest.raises(PoleError):
        scaled_logderiv(DirichletCharacter.trivial(), 1, 0.1, 0.0)


@pytest.mark.parametrize("k,eta", [(1, 0.0), (1, 0.6), (-1, 0.1)])
def test_rejects_parameters(k: int, eta: float) -> None:
    """Test that invalid orders and scales are refused.

    :param k: order of the derivative
    :param eta: scale
    """
    with pytest.raises(ValueError):
        scaled_logderiv(character_by_label("3.1"), k, eta, 0.0)
