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

"""Power sum lower bounds of Turan type."""

import math
import typing as T

import numpy as np
from dataclasses import dataclass

from autosieve.core.sampling import random_unitary, spawn_rngs
from autosieve.errors import (
    NoNearbyZeroError,
    TuranHypothesisError,
    TuranSearchFailed,
)
from autosieve.zero_lab.zeros import ZeroList

TURAN_BASE = 50.0
NEARBY_RADIUS = 200.0


def power_sum_log_margin(
    zs: T.Sequence[complex], k: int, base: float = TURAN_BASE
) -> float:
    """Return log|sum z_j^k| - k log(|z_1| / base).

    Terms are normalized by the largest modulus so no power overflows.

    :param zs: nonempty complex numbers
    :param k: exponent
    :param base: constant dividing |z_1|
    :return: nonnegative exactly when the power sum bound holds at k
    """
    points = np.asarray(zs, dtype=np.complex128)
    top = float(np.max(np.abs(points)))
    total = abs(np.sum((points / top) ** k))
    if total == 0:
        return -math.inf
    return math.log(total) + k * math.log(base)


def turan_search(
    zs: T.Sequence[complex], K: int, base: float = TURAN_BASE
) -> int:
    """Return the smallest k in [K, 2K] with |sum z_j^k| >= (|z_1|/base)^k.

    When K is smaller than the number of terms the search is still run
    and the outcome is attached to the raised TuranHypothesisError.

    :param zs: nonempty complex numbers, not all zero
    :param K: lower end of the exponent range
    :param base: constant dividing |z_1|
    :return: exponent k
    """
    if not len(zs):
        raise ValueError("power sum needs at least one term")
    if K < 1:
        raise ValueError(f"K must be positive, got {K}")
    if not np.any(np.asarray(zs) != 0):
        raise ValueError("power sum terms are all zero")

    found = None
    for k in range(K, 2 * K + 1):
        if power_sum_log_margin(zs, k, base) >= 0:
            found = k
            break
    if K < len(zs):
        raise TuranHypothesisError(len(zs), K, found)
    if found is None:
        raise TuranSearchFailed(f"no k in [{K}, {2 * K}] satisfies the bound")
    return found


def nearby_terms(
    zeros: T.Iterable[complex], s: complex, eta: float
) -> T.List[complex]:
    """Return (s - rho)^-1 over zeros with |s - rho| <= 200 eta.

    :param zeros: zeros rho
    :param s: point 1 + eta + i tau
    :param eta: scale
    :return: terms sorted by decreasing modulus
    """
    ret = [
        1 / (s - rho)
        for rho in zeros
        if abs(s - rho) <= NEARBY_RADIUS * eta
    ]
    return sorted(ret, key=lambda z: (-abs(z), z.real, z.imag))


def power_sum_zero_lower(
    zeros: T.Union[ZeroList, T.Iterable[complex]],
    s: complex,
    eta: float,
    K: int,
) -> T.Tuple[int, float]:
    """Find k with |sum (s - rho)^-(k+1)| >= (100 eta)^-(k+1).

    The sum runs over zeros with |s - rho| <= 200 eta; the exponent k + 1
    is chosen by the power sum search in [K + 1, 2K + 2], so the returned
    k lies in [K, 2K + 1] rather than [K, 2K].

    :param zeros: zero list or plain zeros
    :param s: point 1 + eta + i tau
    :param eta: scale, positive
    :param K: lower end of the searched range of k
    :return: (k, |sum (s - rho)^-(k+1)|), K <= k <= 2K + 1
    """
    if eta <= 0:
        raise ValueError(f"eta must be positive, got {eta}")
    points = list(zeros.zeros if isinstance(zeros, ZeroList) else zeros)
    anchor = complex(1, complex(s).imag)
    if not any(abs(rho - anchor) <= eta * (1 + 1e-12) for rho in points):
        raise NoNearbyZeroError(f"no zero within {eta} of {anchor}")
    terms = nearby_terms(points, s, eta)
    exponent = turan_search(terms, K + 1)
    value = float(abs(np.sum(np.asarray(terms) ** exponent)))
    return exponent - 1, value


def feasible_exponents(
    zs: T.Sequence[complex], K: int, base: float = TURAN_BASE
) -> T.List[int]:
    """Return every k in [K, 2K] meeting the bound, by direct powers.

    :param zs: complex numbers of modulus at most one
    :param K: lower end of the exponent range
    :param base: constant dividing |z_1|
    :return: feasible exponents in increasing order
    """
    points = np.asarray(zs, dtype=np.complex128)
    top = float(np.max(np.abs(points)))
    return [
        k
        for k in range(K, 2 * K + 1)
        if abs(np.sum(points ** k)) >= (top / base) ** k
    ]


@dataclass
class TuranSummary:
    """Outcome of the power sum search over a random corpus."""

    trials: int
    max_terms: int
    failures: int
    oracle_mismatches: int
    largest_k_ratio: float


def _turan_chunk(
    task: T.Tuple[np.random.Generator, int, int, float]
) -> T.Tuple[int, int, float]:
    rng, size, max_terms, base = task
    failures = 0
    mismatches = 0
    largest = 0.0
    for _ in range(size):
        count = int(rng.integers(1, max_terms + 1))
        zs = random_unitary(rng, count)
        try:
            k = turan_search(zs, count, base)
        except (TuranHypothesisError, TuranSearchFailed):
            failures += 1
            continue
        feasible = feasible_exponents(zs, count, base)
        if not feasible or feasible[0] != k:
            mismatches += 1
        largest = max(largest, k / count)
    return failures, mismatches, largest


def verify_turan(
    trials: int,
    max_terms: int,
    seed: T.Optional[int],
    base: float = TURAN_BASE,
    mapper: T.Callable[..., T.Iterable[T.Any]] = map,
    chunk_size: int = 100,
) -> TuranSummary:
    """Run the power sum search on random unimodular configurations.

    Each configuration has between 1 and max_terms points and K equal to
    its size; the result is compared with the exhaustive scan of [K, 2K].

    :param trials: number of configurations
    :param max_terms: largest configuration size
    :param seed: seed of the corpus
    :param base: constant dividing |z_1|
    :param mapper: map-like callable used to spread chunks over workers
    :param chunk_size: configurations per task
    :return: summary
    """
    sizes = [
        min(chunk_size, trials - start)
        for start in range(0, trials, chunk_size)
    ]
    tasks = [
        (rng, size, max_terms, base)
        for rng, size in zip(spawn_rngs(seed, len(sizes)), sizes)
    ]
    results = list(mapper(_turan_chunk, tasks))
    return TuranSummary(
        trials=trials,
        max_terms=max_terms,
        failures=sum(failures for failures, _, _ in results),
        oracle_mismatches=sum(mismatches for _, mismatches, _ in results),
        largest_k_ratio=max((ratio for _, _, ratio in results), default=0.0),
    )
