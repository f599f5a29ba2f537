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

"""Quadratic form inequality for Rankin-Selberg coefficients.

For real x, y the form a x^2 + 2 b x y + c y^2 is the sum of the squares
|x s_mu(A) + y conj s_mu(B)|^2 over the partition sequences of n that are
not single rows, hence positive semidefinite.
"""

import math
import typing as T

import numpy as np
from dataclasses import dataclass

from autosieve.core.ideals import IdealFactorization, PrimeIdeal
from autosieve.core.partition import partition_sequences
from autosieve.core.rep import AutomorphicRepData, default_theta
from autosieve.core.sampling import random_satake, spawn_rngs
from autosieve.errors import NumericalError
from autosieve.schur_rs import (
    check_unramified,
    hecke_eigenvalue,
    rs_coefficient_ideal,
    schur_eval,
)

IMAGINARY_TOLERANCE = 1e-8
SAMPLE_PRIMES = (2, 3, 5, 7, 11)
HISTOGRAM_EDGES = tuple(i / 10 for i in range(11))


@dataclass(frozen=True)
class QuadraticForm:
    """The form a x^2 + 2 b x y + c y^2.

    scale_a and scale_c are the magnitudes a and c were obtained from by
    cancellation; tolerances are relative to them.
    """

    a: float
    b: float
    c: float
    scale_a: float = 1.0
    scale_c: float = 1.0

    def discriminant(self) -> float:
        """Return b^2 - a c.

        :return: discriminant, nonpositive for a semidefinite form
        """
        return self.b * self.b - self.a * self.c

    def normalized_discriminant(self) -> float:
        """Return the discriminant relative to the cancellation scale.

        :return: (b^2 - a c) / (scale_a scale_c)
        """
        return self.discriminant() / (self.scale_a * self.scale_c)

    def psd(self, tolerance: float = 1e-9) -> bool:
        """Return whether the form is positive semidefinite.

        :param tolerance: relative tolerance
        :return: a, c >= 0 and b^2 <= a c, all up to tolerance
        """
        return (
            self.a >= -tolerance * self.scale_a
            and self.c >= -tolerance * self.scale_c
            and self.discriminant()
            <= tolerance * self.scale_a * self.scale_c
        )

    def cauchy_schwarz(self, tolerance: float = 1e-9) -> bool:
        """Return whether |b| <= sqrt(a c) holds up to tolerance.

        :param tolerance: relative tolerance
        :return: whether the inequality holds
        """
        product = max(self.a, 0.0) * max(self.c, 0.0)
        return abs(self.b) <= math.sqrt(product) + tolerance * math.sqrt(
            self.scale_a * self.scale_c
        )


def _real(value: complex, what: str) -> float:
    if abs(value.imag) > IMAGINARY_TOLERANCE * max(1.0, abs(value.real)):
        raise NumericalError(
            f"{what} has imaginary part {value.imag:.3e}, expected real"
        )
    return value.real


def rs_gram_form(
    repA: AutomorphicRepData,
    repB: AutomorphicRepData,
    ideal: IdealFactorization,
) -> QuadraticForm:
    """Build the semidefinite quadratic form attached to an ideal.

    :param repA: first representation
    :param repB: second representation
    :param ideal: ideal coprime to both conductors
    :return: quadratic form
    """
    check_unramified(ideal, repA, repB)
    lambda_a = hecke_eigenvalue(repA, ideal)
    lambda_b = hecke_eigenvalue(repB, ideal)
    rs_aa = _real(
        rs_coefficient_ideal(repA, repA.contragredient(), ideal),
        "lambda_{A x A~}",
    )
    rs_bb = _real(
        rs_coefficient_ideal(repB, repB.contragredient(), ideal),
        "lambda_{B x B~}",
    )
    rs_ab = rs_coefficient_ideal(repA, repB, ideal)
    return QuadraticForm(
        a=rs_aa - abs(lambda_a) ** 2,
        b=(rs_ab - lambda_a * lambda_b).real,
        c=rs_bb - abs(lambda_b) ** 2,
        scale_a=max(1.0, abs(rs_aa)),
        scale_c=max(1.0, abs(rs_bb)),
    )


def sequence_terms(
    repA: AutomorphicRepData,
    repB: AutomorphicRepData,
    ideal: IdealFactorization,
) -> T.List[T.Tuple[complex, complex]]:
    """Return the Schur products of both representations per sequence.

    :param repA: first representation
    :param repB: second representation
    :param ideal: unramified ideal
    :return: (prod s_mu(A), prod s_mu(B)) for every partition sequence
    """
    check_unramified(ideal, repA, repB)
    ret = []
    for sequence in partition_sequences(ideal, max(repA.n, repB.n)):
        term_a = term_b = 1 + 0j
        for prime, mu in sequence.items():
            term_a *= schur_eval(mu, repA.satake_at(prime))
            term_b *= schur_eval(mu, repB.satake_at(prime))
        ret.append((term_a, term_b))
    return ret


def completing_square_sides(
    repA: AutomorphicRepData,
    repB: AutomorphicRepData,
    ideal: IdealFactorization,
    x: float,
    y: float,
) -> T.Tuple[float, float]:
    """Evaluate both sides of the completing-the-square inequality.

    :param repA: first representation
    :param repB: second representation
    :param ideal: unramified ideal
    :param x: real weight of the first representation
    :param y: real weight of the second representation
    :return: (|x lambda_A + y conj lambda_B|^2, sum of the squared terms)
    """
    lhs = (
        abs(
            x * hecke_eigenvalue(repA, ideal)
            + y * hecke_eigenvalue(repB, ideal).conjugate()
        )
        ** 2
    )
    rhs = sum(
        abs(x * term_a + y * term_b.conjugate()) ** 2
        for term_a, term_b in sequence_terms(repA, repB, ideal)
    )
    return lhs, rhs


def random_instance(
    rng: np.random.Generator,
    n: int,
    nprime: int,
    perturbed: bool,
    max_primes: int = 3,
    max_exponent: int = 4,
) -> T.Tuple[AutomorphicRepData, AutomorphicRepData, IdealFactorization]:
    """Draw two representations over Q and an unramified ideal.

    :param rng: generator
    :param n: degree of the first representation
    :param nprime: degree of the second representation
    :param perturbed: whether to use the largest admissible Ramanujan margin
    :param max_primes: largest number of distinct primes in the ideal
    :param max_exponent: largest exponent in the ideal
    :return: (repA, repB, ideal)
    """
    count = int(rng.integers(1, max_primes + 1))
    chosen = sorted(rng.choice(SAMPLE_PRIMES, size=count, replace=False))
    factors = tuple(
        (PrimeIdeal(int(p)), int(rng.integers(1, max_exponent + 1)))
        for p in chosen
    )
    ideal = IdealFactorization(factors)
    reps = []
    for degree in (n, nprime):
        theta = default_theta(degree) if perturbed else 0.0
        reps.append(
            AutomorphicRepData(
                n=degree,
                satake={
                    prime: tuple(
                        random_satake(rng, degree, prime.norm, theta)
                    )
                    for prime in ideal.primes
                },
                theta=theta,
            )
        )
    return reps[0], reps[1], ideal


@dataclass
class GramSummary:
    """Distribution of the quadratic forms over a random corpus."""

    trials: int
    violations: int
    max_normalized_discriminant: float
    min_normalized_a: float
    min_normalized_c: float
    histogram: T.List[int]
    max_discriminant: float = 0.0
    min_a: float = 0.0
    min_c: float = 0.0
    absolute_violations: int = 0


def _ratio(form: QuadraticForm) -> float:
    product = form.a * form.c
    if product <= 0:
        return 0.0
    return form.b * form.b / product


def _run_chunk(
    task: T.Tuple[np.random.Generator, int, T.Optional[int], T.Optional[int]]
) -> T.List[QuadraticForm]:
    rng, size, n, nprime = task
    ret = []
    for _ in range(size):
        degree_a = n or int(rng.integers(1, 4))
        degree_b = nprime or int(rng.integers(1, 4))
        perturbed = bool(rng.integers(0, 2))
        ret.append(
            rs_gram_form(
                *random_instance(rng, degree_a, degree_b, perturbed)
            )
        )
    return ret


def verify_gram_forms(
    trials: int,
    seed: T.Optional[int],
    n: T.Optional[int] = None,
    nprime: T.Optional[int] = None,
    tolerance: float = 1e-9,
    mapper: T.Callable[..., T.Iterable[T.Any]] = map,
    chunk_size: int = 250,
) -> GramSummary:
    """Check semidefiniteness of the form on random instances.

    Degrees not given are drawn from 1..3 per instance; half of the
    instances use the largest admissible Ramanujan margin.

    Violations are judged relative to the cancellation scale. The raw
    discriminant and diagonal extremes are reported alongside.

    :param trials: number of instances
    :param seed: seed of the corpus
    :param n: fixed degree of the first representation
    :param nprime: fixed degree of the second representation
    :param tolerance: relative tolerance of the checks, also applied as
        an absolute bound for absolute_violations
    :param mapper: map-like callable used to spread chunks over workers
    :param chunk_size: instances per task
    :return: summary of the distribution
    """
    sizes = [
        min(chunk_size, trials - start)
        for start in range(0, trials, chunk_size)
    ]
    tasks = [
        (rng, size, n, nprime)
        for rng, size in zip(spawn_rngs(seed, len(sizes)), sizes)
    ]
    forms = [form for chunk in mapper(_run_chunk, tasks) for form in chunk]
    histogram, _edges = np.histogram(
        [min(_ratio(form), 1.0) for form in forms], bins=HISTOGRAM_EDGES
    )
    return GramSummary(
        trials=len(forms),
        violations=sum(
            1
            for form in forms
            if not (form.psd(tolerance) and form.cauchy_schwarz(tolerance))
        ),
        max_normalized_discriminant=max(
            (form.normalized_discriminant() for form in forms),
            default=0.0,
        ),
        min_normalized_a=min(
            (form.a / form.scale_a for form in forms), default=0.0
        ),
        min_normalized_c=min(
            (form.c / form.scale_c for form in forms), default=0.0
        ),
        histogram=[int(count) for count in histogram],
        max_discriminant=max(
            (form.discriminant() for form in forms), default=0.0
        ),
        min_a=min((form.a for form in forms), default=0.0),
        min_c=min((form.c for form in forms), default=0.0),
        absolute_violations=sum(
            1
            for form in forms
            if form.discriminant() > tolerance
            or min(form.a, form.c) < -tolerance
        ),
    )
