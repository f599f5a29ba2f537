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

"""Synthetic prime ideals, ideal factorizations and number field data.

Number fields are described only through their splitting tables: which
prime ideals lie above each rational prime and what their residue degrees
are. This is enough for every sum over norms and factorizations.
"""

import functools
import typing as T

import parsimonious
from dataclasses import dataclass, field

from autosieve.core.arith import factorize, is_prime, primes_up_to
from autosieve.errors import MissingSplittingData

GRAMMAR = parsimonious.Grammar(
    r"""
    key    = _ prime degree? index? _
    prime  = ~"[0-9]+"
    degree = "^" ~"[0-9]+"
    index  = "#" ~"[0-9]+"
    _      = ~"\s*"
    """
)


@functools.total_ordering
@dataclass(frozen=True)
class PrimeIdeal:
    """Prime ideal above the rational prime p with residue degree f."""

    p: int
    f: int = 1
    index: int = 0

    def __post_init__(self) -> None:
        """Validate the prime data."""
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not a rational prime")
        if self.f < 1:
            raise ValueError(f"residue degree must be positive: {self.f}")
        if self.index < 0:
            raise ValueError(f"index must be nonnegative: {self.index}")

    @property
    def norm(self) -> int:
        """Return the absolute norm p^f.

        :return: norm
        """
        return self.p ** self.f

    def sort_key(self) -> T.Tuple[int, int, int]:
        """Return the canonical ordering key.

        :return: (norm, p, index)
        """
        return (self.norm, self.p, self.index)

    def __lt__(self, other: T.Any) -> bool:
        """Compare by norm, then rational prime, then index.

        :param other: other prime ideal
        :return: whether self sorts before other
        """
        if not isinstance(other, PrimeIdeal):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    @property
    def label(self) -> str:
        """Return the textual key used in family files.

        :return: key of the form p^f or p^f#i
        """
        ret = f"{self.p}^{self.f}"
        if self.index:
            ret += f"#{self.index}"
        return ret

    def __str__(self) -> str:
        """Return the label.

        :return: label
        """
        return self.label


class _KeyVisitor(parsimonious.NodeVisitor):
    unwrapped_exceptions = (ValueError,)

    def visit_key(self, node: T.Any, visited: T.List[T.Any]) -> PrimeIdeal:
        """Build the prime ideal out of the visited key parts.

        :param node: parse tree node
        :param visited: visited children
        :return: prime ideal
        """
        _, prime, degree, index, _ = visited
        return PrimeIdeal(
            p=prime,
            f=degree[0] if isinstance(degree, list) else 1,
            index=index[0] if isinstance(index, list) else 0,
        )

    def visit_prime(self, node: T.Any, visited: T.List[T.Any]) -> int:
        """Read the rational prime.

        :param node: parse tree node
        :param visited: visited children
        :return: rational prime
        """
        return int(node.text)

    def visit_degree(self, node: T.Any, visited: T.List[T.Any]) -> int:
        """Read the residue degree.

        :param node: parse tree node
        :param visited: visited children
        :return: residue degree
        """
        return int(visited[1].text)

    def visit_index(self, node: T.Any, visited: T.List[T.Any]) -> int:
        """Read the index distinguishing primes above the same p.

        :param node: parse tree node
        :param visited: visited children
        :return: index
        """
        return int(visited[1].text)

    def generic_visit(self, node: T.Any, visited: T.List[T.Any]) -> T.Any:
        """Pass children through, keeping leaf nodes.

        :param node: parse tree node
        :param visited: visited children
        :return: visited children or the node itself
        """
        return visited or node


def parse_prime_key(text: str) -> PrimeIdeal:
    """Parse a prime ideal key such as "7", "3^2" or "5^1#1".

    :param text: key to parse
    :return: parsed prime ideal
    """
    try:
        tree = GRAMMAR.parse(text)
    except parsimonious.ParseError as ex:
        raise ValueError(f'invalid prime ideal key: "{text}"') from ex
    return _KeyVisitor().visit(tree)


@dataclass(frozen=True)
class IdealFactorization:
    """Integral ideal given by its prime factorization."""

    factors: T.Tuple[T.Tuple[PrimeIdeal, int], ...] = ()

    def __post_init__(self) -> None:
        """Normalize and validate the factors."""
        factors = tuple(sorted(self.factors, key=lambda item: item[0]))
        object.__setattr__(self, "factors", factors)
        primes = [prime for prime, _exponent in factors]
        if len(set(primes)) != len(primes):
            raise ValueError("factorization repeats a prime ideal")
        if any(exponent < 1 for _prime, exponent in factors):
            raise ValueError("exponents must be positive")

    @classmethod
    def unit(cls) -> "IdealFactorization":
        """Return the ring of integers O_F.

        :return: empty factorization
        """
        return cls(())

    @classmethod
    def of_prime(
        cls, prime: PrimeIdeal, exponent: int = 1
    ) -> "IdealFactorization":
        """Return a prime power.

        :param prime: prime ideal
        :param exponent: positive exponent
        :return: factorization of prime^exponent
        """
        return cls(((prime, exponent),))

    @classmethod
    def of_integer(cls, value: int) -> "IdealFactorization":
        """Return the ideal (value) of the rational integers.

        :param value: positive integer
        :return: factorization over Q
        """
        return cls(
            tuple((PrimeIdeal(p), e) for p, e in factorize(value))
        )

    @property
    def norm(self) -> int:
        """Return the absolute norm.

        :return: product of prime norms raised to their exponents
        """
        ret = 1
        for prime, exponent in self.factors:
            ret *= prime.norm ** exponent
        return ret

    @property
    def primes(self) -> T.Tuple[PrimeIdeal, ...]:
        """Return the prime ideals dividing self.

        :return: prime ideals in canonical order
        """
        return tuple(prime for prime, _exponent in self.factors)

    def is_unit(self) -> bool:
        """Return whether self is O_F.

        :return: whether there are no factors
        """
        return not self.factors

    def is_squarefree(self) -> bool:
        """Return whether every exponent equals one.

        :return: whether self is squarefree
        """
        return all(exponent == 1 for _prime, exponent in self.factors)

    def ord(self, prime: PrimeIdeal) -> int:
        """Return the exponent of a prime ideal.

        :param prime: prime ideal
        :return: exponent, zero when prime does not divide self
        """
        return dict(self.factors).get(prime, 0)

    def divides(self, other: "IdealFactorization") -> bool:
        """Return whether self divides other.

        :param other: ideal to test
        :return: whether other is a multiple of self
        """
        return all(
            other.ord(prime) >= exponent for prime, exponent in self.factors
        )

    def gcd(self, other: "IdealFactorization") -> "IdealFactorization":
        """Return the greatest common divisor.

        :param other: other ideal
        :return: gcd
        """
        mine = dict(self.factors)
        return IdealFactorization(
            tuple(
                (prime, min(exponent, mine[prime]))
                for prime, exponent in other.factors
                if prime in mine
            )
        )

    def lcm(self, other: "IdealFactorization") -> "IdealFactorization":
        """Return the least common multiple.

        :param other: other ideal
        :return: lcm
        """
        ret = dict(self.factors)
        for prime, exponent in other.factors:
            ret[prime] = max(exponent, ret.get(prime, 0))
        return IdealFactorization(tuple(ret.items()))

    def __mul__(self, other: "IdealFactorization") -> "IdealFactorization":
        """Return the product ideal.

        :param other: other ideal
        :return: product
        """
        ret = dict(self.factors)
        for prime, exponent in other.factors:
            ret[prime] = ret.get(prime, 0) + exponent
        return IdealFactorization(tuple(ret.items()))

    def coprime_to(self, other: "IdealFactorization") -> bool:
        """Return whether self and other share no prime.

        :param other: other ideal
        :return: whether gcd is O_F
        """
        return not set(self.primes) & set(other.primes)

    def sort_key(self) -> T.Tuple[T.Any, ...]:
        """Return the canonical ordering key.

        :return: (norm, factor keys)
        """
        return (
            self.norm,
            tuple(
                (prime.sort_key(), exponent)
                for prime, exponent in self.factors
            ),
        )

    @property
    def label(self) -> str:
        """Return a human readable label.

        :return: label such as "(2^1)^2*(3^1)" or "O"
        """
        if not self.factors:
            return "O"
        return "*".join(
            f"({prime.label})" + (f"^{exponent}" if exponent > 1 else "")
            for prime, exponent in self.factors
        )

    def __str__(self) -> str:
        """Return the label.

        :return: label
        """
        return self.label


@dataclass(frozen=True)
class FieldSpec:
    """Number field known through its degree, places and splitting table.

    When the degree is one every rational prime is inert with residue
    degree one, so no splitting table is needed.
    """

    degree: int = 1
    discriminant_norm: int = 1
    real_places: int = 1
    complex_places: int = 0
    splitting: T.Mapping[int, T.Tuple[PrimeIdeal, ...]] = field(
        default_factory=dict, hash=False
    )

    def __post_init__(self) -> None:
        """Validate the field data."""
        splitting = {
            int(p): tuple(sorted(primes))
            for p, primes in dict(self.splitting).items()
        }
        object.__setattr__(self, "splitting", splitting)
        if self.degree < 1 or self.discriminant_norm < 1:
            raise ValueError("degree and discriminant must be positive")
        if self.real_places + 2 * self.complex_places != self.degree:
            raise ValueError(
                "real places plus twice the complex places must equal "
                "the degree"
            )
        for p, primes in splitting.items():
            if any(prime.p != p for prime in primes):
                raise ValueError(f"prime ideal listed above the wrong p={p}")
            if sum(prime.f for prime in primes) > self.degree:
                raise ValueError(
                    f"residue degrees above {p} exceed the field degree"
                )
            if len({(prime.f, prime.index) for prime in primes}) != len(
                primes
            ):
                raise ValueError(f"duplicate prime ideal above {p}")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        """Return the field of rational numbers.

        :return: Q
        """
        return cls()

    def is_rational(self) -> bool:
        """Return whether this is Q.

        :return: whether the degree is one
        """
        return self.degree == 1

    def place_degrees(self) -> T.List[int]:
        """Return the local degrees d(v) of the archimedean places.

        :return: 1 for every real place followed by 2 for every complex one
        """
        return [1] * self.real_places + [2] * self.complex_places

    def primes_above(self, p: int) -> T.Tuple[PrimeIdeal, ...]:
        """Return the prime ideals above a rational prime.

        :param p: rational prime
        :return: prime ideals above p
        """
        if p in self.splitting:
            return self.splitting[p]
        if self.is_rational():
            return (PrimeIdeal(p),)
        raise MissingSplittingData(p)

    def prime_ideals_up_to(self, X: float) -> T.List[PrimeIdeal]:
        """Return all prime ideals of norm at most X.

        :param X: norm bound
        :return: prime ideals sorted by norm
        """
        ret = []
        for p in primes_up_to(int(X)):
            ret += [
                prime for prime in self.primes_above(p) if prime.norm <= X
            ]
        return sorted(ret)


def ideals_up_to(
    field_spec: FieldSpec, X: float
) -> T.List[IdealFactorization]:
    """Enumerate every integral ideal of norm at most X.

    :param field_spec: field whose ideals to enumerate
    :param X: norm bound
    :return: ideals ordered by (norm, factorization), starting with O_F
    """
    primes = field_spec.prime_ideals_up_to(X)
    ret: T.List[IdealFactorization] = []

    def _extend(
        start: int,
        norm: int,
        factors: T.List[T.Tuple[PrimeIdeal, int]],
    ) -> None:
        ret.append(IdealFactorization(tuple(factors)))
        for i in range(start, len(primes)):
            prime = primes[i]
            if norm * prime.norm > X:
                break
            power, exponent = norm * prime.norm, 1
            while power <= X:
                _extend(i + 1, power, factors + [(prime, exponent)])
                power *= prime.norm
                exponent += 1

    _extend(0, 1, [])
    return sorted(ret, key=IdealFactorization.sort_key)
