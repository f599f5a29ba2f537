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

"""Seeded random data for experiments and property checks."""

import typing as T

import numpy as np


def make_rng(seed: T.Optional[int]) -> np.random.Generator:
    """Return a generator whose stream depends only on the seed.

    :param seed: integer seed, None for fresh entropy
    :return: numpy generator
    """
    return np.random.default_rng(np.random.SeedSequence(seed))


def spawn_rngs(
    seed: T.Optional[int], count: int
) -> T.List[np.random.Generator]:
    """Return independent generators, one per task.

    Each task gets its own stream, so results do not depend on the order
    in which worker threads pick tasks up.

    :param seed: integer seed
    :param count: number of generators
    :return: generators
    """
    return [
        np.random.default_rng(child)
        for child in np.random.SeedSequence(seed).spawn(count)
    ]


def random_unitary(rng: np.random.Generator, count: int) -> np.ndarray:
    """Return points uniformly distributed on the unit circle.

    :param rng: generator
    :param count: number of points
    :return: complex array
    """
    return np.exp(2j * np.pi * rng.random(count))


def random_satake(
    rng: np.random.Generator, n: int, norm: int, theta: float
) -> np.ndarray:
    """Return Satake parameters of modulus N(p)^t with |t| <= theta.

    :param rng: generator
    :param n: number of parameters
    :param norm: norm of the prime ideal
    :param theta: Ramanujan margin, 0 for unitary parameters
    :return: complex array
    """
    points = random_unitary(rng, n)
    if theta <= 0:
        return points
    exponents = rng.uniform(-theta, theta, n)
    return points * np.power(float(norm), exponents)


def random_det_one_pair(rng: np.random.Generator) -> np.ndarray:
    """Return GL(2) Satake parameters {e^(i t), e^(-i t)}.

    :param rng: generator
    :return: complex array of length two with product one
    """
    point = random_unitary(rng, 1)[0]
    return np.array([point, point.conjugate()])
