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

"""Schur polynomials and the local coefficient formulas built from them.

All local series are truncated power series in x = N(p)^(-s). Complete
homogeneous symmetric polynomials come from the generating function
prod (1 - a x)^(-1); Schur polynomials are Jacobi-Trudi determinants in
them, which stay well defined for repeated or vanishing parameters.
"""

import typing as T

import numpy as np
from dataclasses import dataclass

from autosieve.core.ideals import IdealFactorization, PrimeIdeal
from autosieve.core.partition import Partition, partitions_of
from autosieve.core.rep import AutomorphicRepData
from autosieve.core.sampling import (
    make_rng,
    random_det_one_pair,
    random_unitary,
    spawn_rngs,
)
from autosieve.errors import RamifiedIdealError

Alphas = T.Sequence[complex]


@dataclass(frozen=True)
class PowerSeries:
    """Power series truncated after x^degree."""

    coefficients: T.Tuple[complex, ...]

    def __post_init__(self) -> None:
        """Normalize the coefficients."""
        if not self.coefficients:
            raise ValueError("power series needs at least one coefficient")
        object.__setattr__(
            self,
            "coefficients",
            tuple(complex(value) for value in self.coefficients),
        )

    @classmethod
    def from_array(cls, values: np.ndarray) -> "PowerSeries":
        """Build a series out of a coefficient array.

        :param values: coefficients of x^0 .. x^degree
        :return: power series
        """
        return cls(tuple(complex(value) for value in values))

    @classmethod
    def euler_factor(cls, roots: Alphas, degree: int) -> "PowerSeries":
        """Return prod (1 - r x)^(-1).

        :param roots: reciprocal roots
        :param degree: truncation order
        :return: series of the local factor
        """
        return cls.from_array(complete_homogeneous(roots, degree))

    @classmethod
    def euler_polynomial(cls, roots: Alphas, degree: int) -> "PowerSeries":
        """Return prod (1 - r x), the inverse of the local factor.

        :param roots: reciprocal roots
        :param degree: truncation order
        :return: truncated polynomial
        """
        ret = np.zeros(degree + 1, dtype=np.complex128)
        ret[0] = 1
        for root in roots:
            ret[1:] -= root * ret[:-1].copy()
        return cls.from_array(ret)

    @property
    def degree(self) -> int:
        """Return the truncation order.

        :return: index of the last coefficient
        """
        return len(self.coefficients) - 1

    def as_array(self) -> np.ndarray:
        """Return the coefficients as a numpy array.

        :return: complex array
        """
        return np.array(self.coefficients, dtype=np.complex128)

    def __getitem__(self, k: int) -> complex:
        """Return the coefficient of x^k.

        :param k: exponent
        :return: coefficient
        """
        return self.coefficients[k]

    def __len__(self) -> int:
        """Return the number of coefficients.

        :return: degree + 1
        """
        return len(self.coefficients)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        """Multiply and truncate to the smaller degree.

        :param other: other series
        :return: product
        """
        degree = min(self.degree, other.degree)
        product = np.convolve(self.as_array(), other.as_array())
        return PowerSeries.from_array(product[: degree + 1])

    def max_deviation(self, other: T.Union["PowerSeries", Alphas]) -> float:
        """Return the largest coefficient difference.

        :param other: series or coefficient list of the same length
        :return: max |a_k - b_k|
        """
        theirs = (
            other.as_array()
            if isinstance(other, PowerSeries)
            else np.asarray(other, dtype=np.complex128)
        )
        return float(np.max(np.abs(self.as_array() - theirs)))


def complete_homogeneous(alphas: Alphas, degree: int) -> np.ndarray:
    """Return h_0 .. h_degree evaluated at alphas.

    :param alphas: variables
    :param degree: largest index
    :return: complex array of complete homogeneous symmetric polynomials
    """
    ret = np.zeros(degree + 1, dtype=np.complex128)
    ret[0] = 1
    for alpha in alphas:
        for k in range(1, degree + 1):
            ret[k] += alpha * ret[k - 1]
    return ret


def schur_eval(mu: Partition, alphas: Alphas) -> complex:
    """Evaluate the Schur polynomial s_mu at alphas.

    :param mu: partition
    :param alphas: variables
    :return: s_mu(alphas), zero when mu has more parts than variables
    """
    length = mu.length()
    if length > len(alphas):
        return 0j
    if length == 0:
        return 1 + 0j
    h = complete_homogeneous(alphas, mu.parts[0] + length - 1)
    matrix = np.zeros((length, length), dtype=np.complex128)
    for i, part in enumerate(mu.parts):
        for j in range(length):
            index = part - i + j
            if index >= 0:
                matrix[i, j] = h[index]
    if length == 1:
        return complex(matrix[0, 0])
    return complex(np.linalg.det(matrix))


def check_unramified(
    ideal: IdealFactorization, *reps: AutomorphicRepData
) -> None:
    """Raise when a prime of the ideal divides one of the conductors.

    :param ideal: ideal to check
    :param reps: representations whose conductors matter
    """
    for prime in ideal.primes:
        for rep in reps:
            if rep.is_ramified(prime):
                raise RamifiedIdealError(
                    f"{prime} divides the conductor of "
                    f"{rep.label or 'a representation'}"
                )


def hecke_eigenvalue(
    rep: AutomorphicRepData, ideal: IdealFactorization
) -> complex:
    """Return the Dirichlet coefficient lambda(n) of L(s, rep).

    :param rep: representation data
    :param ideal: integral ideal
    :return: product of h_e(A(p)) over the prime powers p^e || n
    """
    ret = 1 + 0j
    for prime, exponent in ideal.factors:
        ret *= complete_homogeneous(rep.satake_at(prime), exponent)[exponent]
    return ret


def rs_local_series(A: Alphas, B: Alphas, degree: int) -> PowerSeries:
    """Return the unramified Rankin-Selberg local factor as a series.

    :param A: Satake parameters of the first representation
    :param B: Satake parameters of the second representation
    :param degree: truncation order
    :return: prod over pairs (1 - a b x)^(-1)
    """
    return PowerSeries.euler_factor([a * b for a in A for b in B], degree)


def schur_partition_sum(A: Alphas, B: Alphas, k: int) -> complex:
    """Return the Cauchy expansion sum over |mu| = k of s_mu(A) s_mu(B).

    :param A: first parameter set
    :param B: second parameter set
    :param k: size of the partitions
    :return: partition sum
    """
    return sum(
        (
            schur_eval(mu, A) * schur_eval(mu, B)
            for mu in partitions_of(k, min(len(A), len(B)))
        ),
        0j,
    )


def rs_coefficient_ideal(
    repA: AutomorphicRepData,
    repB: AutomorphicRepData,
    ideal: IdealFactorization,
) -> complex:
    """Return the Rankin-Selberg coefficient lambda_{A x B}(n).

    :param repA: first representation
    :param repB: second representation
    :param ideal: integral ideal coprime to both conductors
    :return: product over p^e || n of the Schur partition sums
    """
    check_unramified(ideal, repA, repB)
    ret = 1 + 0j
    for prime, exponent in ideal.factors:
        ret *= schur_partition_sum(
            repA.satake_at(prime), repB.satake_at(prime), exponent
        )
    return ret


def h_local_series(
    repA: AutomorphicRepData,
    repB: AutomorphicRepData,
    prime: PrimeIdeal,
    degree: int,
) -> PowerSeries:
    """Return the local factor of the H-series at a prime.

    This is L_p(x, A x B~)^(-1) times sum_k lambda_A(p^k) lambda_B~(p^k) x^k.

    :param repA: first representation
    :param repB: second representation
    :param prime: prime ideal unramified for both
    :param degree: truncation order
    :return: power series
    """
    check_unramified(IdealFactorization.of_prime(prime), repA, repB)
    A = repA.satake_at(prime)
    B_dual = [beta.conjugate() for beta in repB.satake_at(prime)]
    diagonal = PowerSeries.from_array(
        complete_homogeneous(A, degree) * complete_homogeneous(B_dual, degree)
    )
    factor = PowerSeries.euler_polynomial(
        [a * b for a in A for b in B_dual], degree
    )
    return factor * diagonal


@dataclass
class DeviationSummary:
    """Largest deviation of computed coefficients from their oracle."""

    trials: int
    degree: int
    max_deviation: float


def _cauchy_chunk(
    task: T.Tuple[np.random.Generator, int, int, int, int]
) -> float:
    rng, size, n, nprime, degree = task
    ret = 0.0
    for _ in range(size):
        A = np.exp(2j * np.pi * rng.random(n))
        B = np.exp(2j * np.pi * rng.random(nprime))
        series = rs_local_series(A, B, degree)
        expected = [schur_partition_sum(A, B, k) for k in range(degree + 1)]
        ret = max(ret, series.max_deviation(expected))
    return ret


def verify_cauchy(
    n: int,
    nprime: int,
    degree: int,
    trials: int,
    seed: T.Optional[int],
    mapper: T.Callable[..., T.Iterable[T.Any]] = map,
    chunk_size: int = 50,
) -> DeviationSummary:
    """Compare Rankin-Selberg local series with Schur partition sums.

    :param n: number of parameters of the first set
    :param nprime: number of parameters of the second set
    :param degree: highest coefficient compared
    :param trials: number of random unitary pairs
    :param seed: seed of the corpus
    :param mapper: map-like callable used to spread chunks over workers
    :param chunk_size: pairs per task
    :return: largest absolute coefficient deviation
    """
    sizes = [
        min(chunk_size, trials - start)
        for start in range(0, trials, chunk_size)
    ]
    tasks = [
        (rng, size, n, nprime, degree)
        for rng, size in zip(spawn_rngs(seed, len(sizes)), sizes)
    ]
    return DeviationSummary(
        trials=trials,
        degree=degree,
        max_deviation=max(mapper(_cauchy_chunk, tasks), default=0.0),
    )


def classical_h_coefficients(degree: int) -> T.List[complex]:
    """Return the coefficients of 1 - x^2, truncated.

    :param degree: truncation order
    :return: [1, 0, -1, 0, ...]
    """
    ret = [0j] * (degree + 1)
    ret[0] = 1 + 0j
    if degree >= 2:
        ret[2] = -1 + 0j
    return ret


def verify_hseries(
    trials: int, seed: T.Optional[int], degree: int = 8
) -> T.Dict[str, DeviationSummary]:
    """Compare H-series local factors with their closed forms.

    GL(2) pairs with determinant one must give 1 - x^2, GL(1) pairs the
    constant series 1.

    :param trials: number of random pairs per degree
    :param seed: seed of the corpus
    :param degree: truncation order
    :return: deviations keyed by "gl1" and "gl2"
    """
    rng = make_rng(seed)
    prime = PrimeIdeal(2)
    deviations = {"gl1": 0.0, "gl2": 0.0}
    for _ in range(trials):
        pairs = {
            "gl1": (random_unitary(rng, 1), random_unitary(rng, 1)),
            "gl2": (random_det_one_pair(rng), random_det_one_pair(rng)),
        }
        for key, (alphas, betas) in pairs.items():
            repA = AutomorphicRepData(
                n=len(alphas), satake={prime: tuple(alphas)}, theta=0.0
            )
            repB = AutomorphicRepData(
                n=len(betas), satake={prime: tuple(betas)}, theta=0.0
            )
            expected = (
                classical_h_coefficients(degree)
                if key == "gl2"
                else [1 + 0j] + [0j] * degree
            )
            series = h_local_series(repA, repB, prime, degree)
            deviations[key] = max(
                deviations[key], series.max_deviation(expected)
            )
    return {
        key: DeviationSummary(
            trials=trials, degree=degree, max_deviation=value
        )
        for key, value in deviations.items()
    }
