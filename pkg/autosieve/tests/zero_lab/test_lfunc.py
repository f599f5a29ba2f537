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

"""Tests for autosieve.zero_lab.lfunc module."""

import cmath
import math

import mpmath
import pytest

from autosieve.core.characters import (
    DirichletCharacter,
    character_by_label,
    primitive_characters,
)
from autosieve.errors import PoleError
from autosieve.zero_lab.lfunc import (
    hardy_z,
    hurwitz_zeta,
    l_value,
    log_derivatives,
    log_gamma_factor,
)


def completed_l_value(chi: DirichletCharacter, s: complex) -> complex:
    """Return the completed L-function Lambda(s, chi).

    :param chi: primitive Dirichlet character
    :param s: argument
    :return: completed L-function
    """
    return cmath.exp(log_gamma_factor(chi, s)) * l_value(chi, s)


@pytest.mark.parametrize(
    "s,a",
    [
        (2, 1.0),
        (0.5 + 10j, 0.25),
        (-1.5 + 3j, 0.7),
        (1.2 - 40j, 1 / 3),
        (3 + 0.5j, 2.5),
    ],
)
def test_hurwitz_zeta(s: complex, a: float) -> None:
    """Test the Hurwitz zeta function against mpmath.

    :param s: argument
    :param a: shift
    """
    expected = complex(mpmath.zeta(s, a))
    assert abs(hurwitz_zeta(s, a) - expected) <= 1e-9 * max(
        1, abs(expected)
    )


def test_hurwitz_zeta_pole() -> None:
    """Test that s = 1 is rejected."""
    with pytest.raises(PoleError):
        hurwitz_zeta(1, 0.5)


@pytest.mark.parametrize("s", [2, 0.5 + 6j, 0.3 + 20j, 1.7 - 3j])
def test_l_value_mod_3(s: complex) -> None:
    """Test L(s, chi) for the real character mod 3 against mpmath.

    :param s: argument
    """
    chi = character_by_label("3.1")
    expected = complex(mpmath.dirichlet(s, [0, 1, -1]))
    assert abs(l_value(chi, s) - expected) <= 1e-9 * max(1, abs(expected))


def test_special_values() -> None:
    """Test zeta(2) and L(1, chi) for the character mod 3."""
    zeta = DirichletCharacter.trivial()
    assert l_value(zeta, 2) == pytest.approx(math.pi ** 2 / 6, rel=1e-10)
    chi = character_by_label("3.1")
    assert l_value(chi, 1) == pytest.approx(
        math.pi / (3 * math.sqrt(3)), rel=1e-10
    )


def test_trivial_character_pole() -> None:
    """Test that the trivial character has a pole at s = 1."""
    with pytest.raises(PoleError):
        l_value(DirichletCharacter.trivial(), 1)


def test_first_zeta_zero() -> None:
    """Test that zeta nearly vanishes at its first zero."""
    zeta = DirichletCharacter.trivial()
    assert abs(l_value(zeta, complex(0.5, 14.134725141734693))) < 1e-8


@pytest.mark.parametrize("s", [2 + 1j, 1.3 + 5j])
def test_log_derivatives(s: complex) -> None:
    """Test derivatives of zeta'/zeta against mpmath.

    :param s: point right of the critical strip
    """
    zeta = DirichletCharacter.trivial()
    derivatives = log_derivatives(zeta, s, 3)
    for k, value in enumerate(derivatives):
        expected = complex(
            mpmath.diff(lambda z: mpmath.log(mpmath.zeta(z)), s, k + 1)
        )
        assert abs(value - expected) <= 1e-7 * max(1, abs(expected))


@pytest.mark.parametrize("modulus", [3, 4, 5, 8])
def test_functional_equation(modulus: int) -> None:
    """Test Lambda(s) = Lambda(1 - s) for real primitive characters.

    :param modulus: modulus
    """
    characters = [
        chi for chi in primitive_characters(modulus) if chi.is_real()
    ]
    assert characters
    for chi in characters:
        for s in (0.3 + 2j, 0.8 + 7j, 2.5):
            left = completed_l_value(chi, s)
            right = completed_l_value(chi, 1 - s)
            assert abs(left - right) <= 1e-8 * max(1, abs(left))


def test_hardy_z_sign_change() -> None:
    """Test that the rotated zeta changes sign around its first zero."""
    zeta = DirichletCharacter.trivial()
    assert hardy_z(zeta, 14.0) * hardy_z(zeta, 14.3) < 0
    assert hardy_z(zeta, 10.0) * hardy_z(zeta, 14.0) > 0
