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

"""Tests for autosieve.cmd.common.inputs module."""

import argparse
import typing as T

import pytest

from autosieve.api.cmd import CommandUnavailable
from autosieve.cmd.common.inputs import (
    load_characters,
    load_family,
    random_norm_coefficients,
)
from autosieve.core.characters import character_by_label


def family_args(**kwargs: T.Any) -> argparse.Namespace:
    """Return family arguments with one source selected.

    :return: namespace
    """
    args = argparse.Namespace(
        family=None, characters_mod=None, qmax=None, Qmax=None
    )
    for key, value in kwargs.items():
        setattr(args, key, value)
    return args


def test_full_character_group() -> None:
    """Test that --characters-mod keeps imprimitive characters."""
    family = load_family(family_args(characters_mod=6))
    assert len(family) == 2
    assert family.is_character_family()
    assert not family.members[0].character.is_primitive()


def test_modulus_cap() -> None:
    """Test the primitive characters up to a modulus."""
    family = load_family(family_args(qmax=5))
    assert [member.label for member in family] == [
        "chi_1.0",
        "chi_3.1",
        "chi_4.1",
        "chi_5.1",
        "chi_5.2",
        "chi_5.3",
    ]


def test_conductor_cap() -> None:
    """Test the primitive characters up to an analytic conductor."""
    labels = {member.label for member in load_family(family_args(Qmax=40))}
    assert "chi_11.2" in labels
    assert "chi_11.1" not in labels


def test_load_characters() -> None:
    """Test the single character and modulus options."""
    chi = character_by_label("5.2")
    assert load_characters(argparse.Namespace(character=chi, q=None)) == [chi]
    assert len(load_characters(argparse.Namespace(character=None, q=5))) == 3
    with pytest.raises(CommandUnavailable):
        load_characters(argparse.Namespace(character=None, q=2))


def test_random_coefficients() -> None:
    """Test that random coefficients depend on the seed only."""
    first = random_norm_coefficients(20, 3)
    assert sorted(first) == list(range(1, 21))
    assert random_norm_coefficients(20, 3) == first
    assert random_norm_coefficients(20, 4) != first
