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

"""Integer partitions and sequences of partitions indexed by prime ideals."""

import itertools
import typing as T

from dataclasses import dataclass

from autosieve.core.ideals import IdealFactorization, PrimeIdeal


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing sequence of positive integers."""

    parts: T.Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        """Validate the parts."""
        parts = tuple(int(part) for part in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(part <= 0 for part in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must not increase: {parts}")

    def length(self) -> int:
        """Return the number of parts.

        :return: length of the partition
        """
        return len(self.parts)

    def size(self) -> int:
        """Return the sum of parts.

        :return: size of the partition
        """
        return sum(self.parts)

    def __str__(self) -> str:
        """Return the usual parenthesized notation.

        :return: textual representation
        """
        return "(" + ",".join(str(part) for part in self.parts) + ")"


@dataclass(frozen=True)
class PartitionSequence:
    """Partitions attached to the prime factors of an ideal."""

    primes: T.Tuple[PrimeIdeal, ...]
    partitions: T.Tuple[Partition, ...]

    def items(self) -> T.Iterable[T.Tuple[PrimeIdeal, Partition]]:
        """Iterate over (prime ideal, partition) pairs.

        :return: pairs in factorization order
        """
        return zip(self.primes, self.partitions)


def _partitions(
    k: int, max_length: int, max_part: int
) -> T.Iterator[T.Tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(k, max_part), 0, -1):
        # remaining parts cannot cover the rest
        if first * max_length < k:
            break
        for rest in _partitions(k - first, max_length - 1, first):
            yield (first,) + rest


def partitions_of(k: int, max_length: int) -> T.List[Partition]:
    """Enumerate partitions of k with at most max_length parts.

    Partitions come in lexicographically descending order, so (4) precedes
    (3,1) which precedes (2,2).

    :param k: size of the partitions
    :param max_length: maximal number of parts
    :return: list of partitions
    """
    if k < 0 or max_length < 0:
        raise ValueError("size and length bound must be nonnegative")
    return [Partition(parts) for parts in _partitions(k, max_length, k)]


def partition_sequences(
    ideal: IdealFactorization, max_length: int
) -> T.List[PartitionSequence]:
    """Enumerate sequences of partitions matching an ideal factorization.

    :param ideal: ideal whose exponents give the partition sizes
    :param max_length: maximal number of parts of each partition
    :return: every sequence with sizes equal to the prime exponents
    """
    primes = tuple(prime for prime, _exponent in ideal.factors)
    choices = [
        partitions_of(exponent, max_length)
        for _prime, exponent in ideal.factors
    ]
    return [
        PartitionSequence(primes=primes, partitions=tuple(combo))
        for combo in itertools.product(*choices)
    ]
