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

"""Tests for autosieve.sieve module."""

import math

import pytest

from autosieve.core.characters import DirichletCharacter, character_by_label
from autosieve.core.ideals import IdealFactorization, PrimeIdeal
from autosieve.core.rep import AutomorphicRepData, character_rep
from autosieve.errors import (
    IndefiniteGramMatrix,
    NotSquarefreeError,
    RamifiedIdealError,
    UnsupportedRepresentation,
)
from autosieve.sieve import (
    character_kappa,
    density,
    local_density,
    residual_trend,
    rs_partial_sum_lower,
    selberg_weights,
    selberg_weights_from_density,
    smoothed_rs_sum,
)
from autosieve.zero_lab.testfunc import TestFunction


def chi_rep(label: str) -> AutomorphicRepData:
    """Return the GL(1) data of a character given by label.

    :param label: character label
    :return: representation
    """
    return character_rep(character_by_label(label))


def test_density_of_character() -> None:
    """Test that g(p) = 1/p at primes not dividing the modulus."""
    rep = chi_rep("3.1")
    for p in (2, 5, 7, 11):
        assert density(rep, PrimeIdeal(p)) == pytest.approx(1 / p)
    with pytest.raises(RamifiedIdealError):
        density(rep, PrimeIdeal(3))


def test_local_density_validation() -> None:
    """Test that densities need squarefree ideals."""
    rep = chi_rep("3.1")
    with pytest.raises(NotSquarefreeError):
        local_density(rep, rep, IdealFactorization.of_integer(4))
    value = local_density(rep, rep, IdealFactorization.of_integer(10))
    assert value == pytest.approx(1 / 10)


def test_selberg_weights_closed_form() -> None:
    """Test the minimum against its closed form for chi mod 3 at z = 10."""
    weights = selberg_weights(chi_rep("3.1"), 10)
    assert [d.norm for d in weights.support] == [1, 2, 5, 7, 10]
    # 1 / (1 + 1 + 1/4 + 1/6 + 1/4)
    assert weights.closed_form_diagonal == pytest.approx(3 / 8)
    assert weights.diagonal == pytest.approx(3 / 8, rel=1e-9)
    assert weights.weight(IdealFactorization.unit()) == 1
    assert weights.weight(IdealFactorization.of_integer(3)) == 0
    assert not weights.flagged
    assert weights.min_eigenvalue > 0


def test_selberg_weights_two_primes() -> None:
    """Test the worked example g(2) = 1/2, g(3) = 1/3 at z = 4."""
    weights = selberg_weights_from_density(
        {PrimeIdeal(2): 1 / 2, PrimeIdeal(3): 1 / 3}, 4
    )
    assert weights.support == [
        IdealFactorization.unit(),
        IdealFactorization.of_integer(2),
        IdealFactorization.of_integer(3),
    ]
    assert weights.diagonal == pytest.approx(2 / 5, abs=1e-12)
    assert weights.closed_form_diagonal == pytest.approx(2 / 5, abs=1e-12)
    assert weights.weight(IdealFactorization.unit()) == 1
    two, three = weights.support[1:]
    assert weights.weight(two) == pytest.approx(-4 / 5)
    assert weights.weight(three) == pytest.approx(-3 / 5)
    assert weights.max_weight() <= 1 + 1e-12


@pytest.mark.parametrize("z", [1, 1.5, 1.99])
def test_selberg_weights_below_two(z: float) -> None:
    """Test that a level below 2 leaves only the unit ideal.

    :param z: sieve level
    """
    weights = selberg_weights_from_density(
        {PrimeIdeal(2): 1 / 2, PrimeIdeal(3): 1 / 3}, z
    )
    assert weights.support == [IdealFactorization.unit()]
    assert weights.rho == {IdealFactorization.unit(): 1.0}
    assert weights.diagonal == 1
    assert weights.closed_form_diagonal == 1


def test_selberg_weights_zeta() -> None:
    """Test that the weights for zeta stay bounded by one."""
    weights = selberg_weights(
        character_rep(DirichletCharacter.trivial()), 30
    )
    assert weights.diagonal == pytest.approx(weights.closed_form_diagonal)
    assert weights.max_weight() <= 1 + 1e-9
    assert 0 < weights.diagonal < 1


def test_selberg_weights_indefinite() -> None:
    """Test that densities above one are caught by the Gram matrix."""
    with pytest.raises(IndefiniteGramMatrix) as info:
        selberg_weights_from_density({PrimeIdeal(2): 3.0}, 10)
    assert info.value.min_eigenvalue < 0


def test_selberg_weights_flag_unit_density() -> None:
    """Test that g(p) = 1 is flagged and leaves no closed form."""
    weights = selberg_weights_from_density(
        {PrimeIdeal(2): 1.0, PrimeIdeal(3): 0.5}, 10
    )
    assert weights.flagged == [PrimeIdeal(2)]
    assert weights.closed_form_diagonal is None


def test_character_kappa() -> None:
    """Test the residue for equal and distinct characters."""
    assert character_kappa(chi_rep("3.1"), chi_rep("3.1")) == 2 / 3
    assert character_kappa(chi_rep("3.1"), chi_rep("4.1")) == 0
    with pytest.raises(UnsupportedRepresentation):
        character_kappa(AutomorphicRepData(n=1), chi_rep("3.1"))


@pytest.mark.parametrize("d", [1, 2, 10])
def test_smoothed_sum_main_term(d: int) -> None:
    """Test that the smoothed sum matches its main term.

    :param d: modulus of the progression
    """
    rep = chi_rep("3.1")
    ideal = IdealFactorization.of_integer(d)
    report = smoothed_rs_sum(rep, rep, ideal, 1e5, 1)
    assert report.kappa == pytest.approx(2 / 3)
    assert report.density == pytest.approx(1 / d)
    assert report.terms > 0
    assert report.relative_residual < 1e-3


def test_smoothed_sum_distinct_characters() -> None:
    """Test that distinct characters leave no main term."""
    report = smoothed_rs_sum(
        chi_rep("3.1"),
        chi_rep("4.1"),
        IdealFactorization.unit(),
        1e5,
        1,
        phi=TestFunction.plateau(0.5),
    )
    assert report.main_term == 0
    assert report.relative_residual < 1e-3


def test_residual_trend() -> None:
    """Test the nonincreasing trend with a noise floor."""
    assert residual_trend([1e-2, 1e-3, 1e-4], 1e-6)[0]
    assert residual_trend([1e-7, 5e-7, 1e-7], 1e-6)[0]
    assert not residual_trend([1e-3, 1e-2], 1e-6)[0]


def test_rs_partial_sum_lower() -> None:
    """Test the harmonic lower bound for chi mod 3."""
    lhs, rhs = rs_partial_sum_lower(chi_rep("3.1"), 100)
    assert lhs == pytest.approx(3.8245, abs=1e-3)
    assert rhs == pytest.approx((1 + 2 / 3 * math.log(100)) / 3)
    assert lhs >= rhs
