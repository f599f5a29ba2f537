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

"""Tests for autosieve.schur_rs module."""

import cmath
import itertools
import typing as T

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autosieve.core.ideals import IdealFactorization, PrimeIdeal
from autosieve.core.partition import Partition, partitions_of
from autosieve.core.rep import AutomorphicRepData
from autosieve.errors import RamifiedIdealError
from autosieve.schur_rs import (
    PowerSeries,
    classical_h_coefficients,
    complete_homogeneous,
    hecke_eigenvalue,
    h_local_series,
    rs_coefficient_ideal,
    rs_local_series,
    schur_eval,
    schur_partition_sum,
    verify_cauchy,
    verify_hseries,
)

ANGLES = st.lists(
    st.floats(min_value=0, max_value=2 * np.pi), min_size=1, max_size=4
)


def on_circle(angles: T.List[float]) -> T.List[complex]:
    """Map angles to the unit circle.

    :param angles: angles in radians
    :return: unit complex numbers
    """
    return [cmath.exp(1j * angle) for angle in angles]


def test_complete_homogeneous() -> None:
    """Test h_k on two variables."""
    h = complete_homogeneous([2, 3], 3)
    assert list(h) == [1, 5, 19, 65]


@pytest.mark.parametrize(
    "parts,alphas,expected",
    [
        ((), [2, 3], 1),
        ((2,), [2, 3], 4 + 6 + 9),
        ((1, 1), [2, 3, 5], 6 + 10 + 15),
        ((2, 1), [1, 1], 2),
        ((1, 1, 1), [2, 3], 0),
        ((2, 2), [0, 0], 0),
    ],
)
def test_schur_eval(
    parts: T.Tuple[int, ...], alphas: T.List[complex], expected: complex
) -> None:
    """Test Schur polynomials against hand expansions.

    :param parts: partition parts
    :param alphas: variables
    :param expected: expected value
    """
    assert schur_eval(Partition(parts), alphas) == pytest.approx(expected)


@given(angles=ANGLES, k=st.integers(min_value=0, max_value=5))
@settings(max_examples=50, deadline=None)
def test_schur_symmetry(angles: T.List[float], k: int) -> None:
    """Test that Schur polynomials are symmetric in their variables.

    :param angles: angles of the variables
    :param k: partition size
    """
    alphas = on_circle(angles)
    for mu in partitions_of(k, len(alphas)):
        value = schur_eval(mu, alphas)
        for perm in itertools.islice(itertools.permutations(alphas), 6):
            assert abs(schur_eval(mu, list(perm)) - value) < 1e-9


@given(a_angles=ANGLES, b_angles=ANGLES)
@settings(max_examples=50, deadline=None)
def test_cauchy_identity(
    a_angles: T.List[float], b_angles: T.List[float]
) -> None:
    """Test the Cauchy expansion of the Rankin-Selberg local factor.

    :param a_angles: angles of the first parameter set
    :param b_angles: angles of the second parameter set
    """
    A = on_circle(a_angles)
    B = on_circle(b_angles)
    series = rs_local_series(A, B, 5)
    for k in range(6):
        assert abs(series[k] - schur_partition_sum(A, B, k)) < 1e-8


def series_inverse(values: np.ndarray) -> np.ndarray:
    """Invert a power series by long division.

    :param values: coefficients with a nonzero constant term
    :return: coefficients of the inverse, same length
    """
    series = np.asarray(values, dtype=np.complex128)
    ret = np.zeros_like(series)
    ret[0] = 1 / series[0]
    for k in range(1, len(series)):
        ret[k] = -np.dot(series[1 : k + 1], ret[k - 1 :: -1]) / series[0]
    return ret


def test_power_series_inverse() -> None:
    """Test that the Euler polynomial inverts the Euler factor."""
    roots = [0.5, -0.25j, 0.75]
    factor = PowerSeries.euler_factor(roots, 6)
    polynomial = PowerSeries.euler_polynomial(roots, 6)
    assert (factor * polynomial).max_deviation([1] + [0] * 6) < 1e-12
    assert polynomial.max_deviation(series_inverse(factor.as_array())) < 1e-12


def test_hecke_eigenvalue() -> None:
    """Test multiplicativity of Hecke eigenvalues."""
    rep = AutomorphicRepData(
        n=2,
        theta=0.0,
        satake={PrimeIdeal(2): (1j, -1j), PrimeIdeal(3): (1, -1)},
    )
    assert hecke_eigenvalue(rep, IdealFactorization.of_integer(2)) == 0
    assert hecke_eigenvalue(
        rep, IdealFactorization.of_integer(4)
    ) == pytest.approx(-1)
    assert hecke_eigenvalue(
        rep, IdealFactorization.of_integer(36)
    ) == pytest.approx(-1)


def test_rs_coefficient_ramified() -> None:
    """Test that ramified ideals are refused."""
    rep = AutomorphicRepData(
        n=1,
        conductor=IdealFactorization.of_integer(2),
        satake={PrimeIdeal(2): (0,), PrimeIdeal(3): (1,)},
    )
    assert rs_coefficient_ideal(
        rep, rep, IdealFactorization.of_integer(9)
    ) == pytest.approx(1)
    with pytest.raises(RamifiedIdealError):
        rs_coefficient_ideal(rep, rep, IdealFactorization.of_integer(6))


def test_h_local_series_gl2() -> None:
    """Test the closed form of the GL(2) H-series local factor."""
    prime = PrimeIdeal(5)
    repA = AutomorphicRepData(
        n=2, theta=0.0, satake={prime: (cmath.exp(0.3j), cmath.exp(-0.3j))}
    )
    repB = AutomorphicRepData(
        n=2, theta=0.0, satake={prime: (cmath.exp(1.1j), cmath.exp(-1.1j))}
    )
    series = h_local_series(repA, repB, prime, 8)
    assert series.max_deviation(classical_h_coefficients(8)) < 1e-10


def test_h_local_series_gl3_division() -> None:
    """Test the GL(3) H-series factor against series division."""
    prime = PrimeIdeal(7)
    rng = np.random.default_rng(3)
    A = tuple(np.exp(2j * np.pi * rng.random(3)))
    B = tuple(np.exp(2j * np.pi * rng.random(3)))
    repA = AutomorphicRepData(n=3, theta=0.0, satake={prime: A})
    repB = AutomorphicRepData(n=3, theta=0.0, satake={prime: B})
    B_dual = [beta.conjugate() for beta in B]
    diagonal = complete_homogeneous(A, 6) * complete_homogeneous(B_dual, 6)
    factor = rs_local_series(A, B_dual, 6).as_array()
    expected = np.convolve(diagonal, series_inverse(factor))[:7]
    series = h_local_series(repA, repB, prime, 6)
    assert series.max_deviation(expected) < 1e-9


def test_verify_cauchy() -> None:
    """Test the randomized Cauchy identity check."""
    summary = verify_cauchy(3, 2, 6, 100, seed=0)
    assert summary.trials == 100
    assert summary.max_deviation < 1e-9
    again = verify_cauchy(3, 2, 6, 100, seed=0, chunk_size=7)
    assert again.max_deviation < 1e-9


def test_verify_hseries() -> None:
    """Test the randomized H-series check."""
    summaries = verify_hseries(50, seed=1)
    assert set(summaries) == {"gl1", "gl2"}
    assert all(s.max_deviation < 1e-9 for s in summaries.values())
