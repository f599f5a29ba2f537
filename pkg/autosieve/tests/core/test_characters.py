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

"""Tests for autosieve.core.characters module."""

import numpy as np
import pytest

from autosieve.core.arith import euler_phi
from autosieve.core.characters import (
    DirichletCharacter,
    character_by_label,
    characters_mod,
    primitive_characters,
)


@pytest.mark.parametrize("modulus", [1, 2, 3, 4, 8, 9, 12, 15, 16, 25])
def test_group_structure(modulus: int) -> None:
    """Test multiplicativity and orthogonality of the character group.

    :param modulus: modulus
    """
    chars = characters_mod(modulus)
    assert len(chars) == euler_phi(modulus)
    assert chars[0].is_principal()
    residues = np.arange(modulus)
    for chi in chars:
        for a in range(modulus):
            for b in range(modulus):
                assert chi(a * b) == pytest.approx(chi(a) * chi(b))
        total = np.sum(chi.values(residues))
        expected = euler_phi(modulus) if chi.is_principal() else 0
        assert abs(total - expected) < 1e-9
    assert len({chi.phases for chi in chars}) == len(chars)


@pytest.mark.parametrize(
    "modulus,count", [(1, 1), (2, 0), (3, 1), (4, 1), (5, 3), (8, 2), (9, 4)]
)
def test_primitive_count(modulus: int, count: int) -> None:
    """Test the number of primitive characters.

    :param modulus: modulus
    :param count: expected count
    """
    assert len(primitive_characters(modulus)) == count


def test_real_character_values_are_exact() -> None:
    """Test that the character mod 3 takes exact values."""
    chi = character_by_label("3.1")
    assert [chi(n) for n in range(6)] == [0, 1, -1, 0, 1, -1]
    assert chi.is_real()
    assert chi.parity == -1
    assert chi.conductor == 3


def test_induced_character_conductor() -> None:
    """Test that a character induced from mod 3 has conductor 3."""
    induced = [chi for chi in characters_mod(6) if not chi.is_principal()]
    assert len(induced) == 1
    assert induced[0].conductor == 3
    assert not induced[0].is_primitive()


def test_conjugate() -> None:
    """Test complex conjugation of a quartic character."""
    chi = character_by_label("5.1")
    assert chi.order == 4
    conj = chi.conjugate()
    for n in range(5):
        assert conj(n) == pytest.approx(chi(n).conjugate())
    assert chi(2) == 1j
    assert chi(3) == -1j


def test_trivial() -> None:
    """Test the character modulo 1."""
    chi = DirichletCharacter.trivial()
    assert chi.is_trivial()
    assert chi.is_primitive()
    assert chi(7) == 1
    assert chi.label == "1.0"


@pytest.mark.parametrize("label", ["3", "3.2", "x.1", "0.0"])
def test_bad_label(label: str) -> None:
    """Test that unknown labels raise ValueError.

    :param label: label
    """
    with pytest.raises(ValueError):
        character_by_label(label)
