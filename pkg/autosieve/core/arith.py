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

"""Elementary arithmetic over the rational integers."""

import functools
import math
import typing as T

import numpy as np

# Rosser-Schoenfeld: psi(x) < CHEBYSHEV_PSI * x for all x > 0.
CHEBYSHEV_PSI = 1.03883


def prime_sieve(nmax: int) -> T.Tuple[np.ndarray, np.ndarray]:
    """Sieve of Eratosthenes.

    :param nmax: inclusive upper bound
    :return: array of primes up to nmax and the boolean primality table
    """
    if nmax < 2:
        return np.array([], dtype=np.int64), np.zeros(nmax + 1, dtype=bool)
    is_prime = np.ones(nmax + 1, dtype=bool)
    is_prime[:2] = False
    for i in range(2, math.isqrt(nmax) + 1):
        if is_prime[i]:
            is_prime[i * i :: i] = False
    return np.nonzero(is_prime)[0].astype(np.int64), is_prime


@functools.lru_cache(maxsize=64)
def primes_up_to(nmax: int) -> T.Tuple[int, ...]:
    """Return primes up to nmax as a tuple of Python integers.

    :param nmax: inclusive upper bound
    :return: primes in increasing order
    """
    primes, _is_prime = prime_sieve(nmax)
    return tuple(int(p) for p in primes)


def factorize(value: int) -> T.List[T.Tuple[int, int]]:
    """Factor a positive integer by trial division.

    :param value: integer to factor
    :return: list of (prime, exponent) pairs in increasing prime order
    """
    if value < 1:
        raise ValueError(f"cannot factor {value}")
    ret: T.List[T.Tuple[int, int]] = []
    prime = 2
    while prime * prime <= value:
        if value % prime == 0:
            exponent = 0
            while value % prime == 0:
                value //= prime
                exponent += 1
            ret.append((prime, exponent))
        prime += 1 if prime == 2 else 2
    if value > 1:
        ret.append((value, 1))
    return ret


def is_prime(value: int) -> bool:
    """Return whether the given integer is prime.

    :param value: integer to test
    :return: whether value is prime
    """
    return value > 1 and factorize(value) == [(value, 1)]


def euler_phi(value: int) -> int:
    """Return Euler's totient.

    :param value: positive integer
    :return: number of residues coprime to value
    """
    ret = value
    for prime, _exponent in factorize(value):
        ret = ret // prime * (prime - 1)
    return ret


def divisors(value: int) -> T.List[int]:
    """Return all positive divisors in increasing order.

    :param value: positive integer
    :return: sorted divisors
    """
    ret = [1]
    for prime, exponent in factorize(value):
        ret = [d * prime ** e for d in ret for e in range(exponent + 1)]
    return sorted(ret)


def von_mangoldt_array(nmax: int) -> np.ndarray:
    """Return von Mangoldt's function on 0..nmax.

    :param nmax: inclusive upper bound
    :return: float array with log p at prime powers p^k and 0 elsewhere
    """
    ret = np.zeros(nmax + 1, dtype=np.float64)
    for prime in primes_up_to(nmax):
        log_p = math.log(prime)
        power = prime
        while power <= nmax:
            ret[power] = log_p
            power *= prime
    return ret
