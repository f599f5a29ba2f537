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

"""Synthetic automorphic representation data and analytic conductors."""

import dataclasses
import math
import types
import typing as T

from dataclasses import dataclass

from autosieve.core.characters import DirichletCharacter, primitive_characters
from autosieve.core.ideals import FieldSpec, IdealFactorization, PrimeIdeal
from autosieve.errors import (
    InvalidFamily,
    InvalidRepresentation,
    MissingSatakeData,
    NonPrimitiveCharacter,
)

BOUND_TOLERANCE = 1e-12


def default_theta(n: int) -> float:
    """Return the unconditional Ramanujan margin 1/2 - 1/(n^2 + 1).

    :param n: degree
    :return: theta
    """
    return 0.5 - 1.0 / (n * n + 1)


@dataclass(frozen=True)
class AutomorphicRepData:
    """Local and global data standing in for a cuspidal representation.

    Satake parameters may be listed explicitly per prime ideal, or come from
    a Dirichlet character for GL(1) over Q.
    """

    n: int
    field: FieldSpec = dataclasses.field(default_factory=FieldSpec.rationals)
    conductor: IdealFactorization = dataclasses.field(
        default_factory=IdealFactorization.unit
    )
    satake: T.Mapping[PrimeIdeal, T.Tuple[complex, ...]] = dataclasses.field(
        default_factory=dict, hash=False
    )
    arch: T.Tuple[T.Tuple[complex, ...], ...] = ()
    pole_order: int = 0
    theta: T.Optional[float] = None
    character: T.Optional[DirichletCharacter] = None
    label: str = ""

    def __post_init__(self) -> None:
        """Normalize the data and check its invariants."""
        if self.n < 1:
            raise InvalidRepresentation(f"invalid degree {self.n}")
        if self.theta is None:
            object.__setattr__(self, "theta", default_theta(self.n))
        theta = T.cast(float, self.theta)
        if not 0 <= theta <= default_theta(self.n) + BOUND_TOLERANCE:
            raise InvalidRepresentation(
                f"theta={theta} outside [0, {default_theta(self.n)}]"
            )
        if self.pole_order not in (0, 1):
            raise InvalidRepresentation(
                f"pole order must be 0 or 1, got {self.pole_order}"
            )
        if self.character is not None and (
            self.n != 1 or not self.field.is_rational()
        ):
            raise InvalidRepresentation(
                "characters only describe GL(1) over Q"
            )

        places = len(self.field.place_degrees())
        arch = self.arch or tuple((0j,) * self.n for _ in range(places))
        arch = tuple(tuple(complex(mu) for mu in place) for place in arch)
        if len(arch) != places:
            raise InvalidRepresentation(
                f"expected parameters for {places} archimedean places, "
                f"got {len(arch)}"
            )
        for place in arch:
            if len(place) != self.n:
                raise InvalidRepresentation(
                    f"expected {self.n} archimedean parameters per place"
                )
            if any(mu.real < -theta - BOUND_TOLERANCE for mu in place):
                raise InvalidRepresentation(
                    f"archimedean parameter with real part below -{theta}"
                )
        object.__setattr__(self, "arch", arch)

        satake = {}
        for prime, alphas in dict(self.satake).items():
            alphas = tuple(complex(alpha) for alpha in alphas)
            self._check_local(prime, alphas)
            satake[prime] = alphas
        object.__setattr__(self, "satake", types.MappingProxyType(satake))

    def _check_local(
        self, prime: PrimeIdeal, alphas: T.Tuple[complex, ...]
    ) -> None:
        theta = T.cast(float, self.theta)
        if len(alphas) != self.n:
            raise InvalidRepresentation(
                f"expected {self.n} Satake parameters at {prime}, "
                f"got {len(alphas)}"
            )
        if (
            prime.p in self.field.splitting
            and prime not in self.field.splitting[prime.p]
        ) or (self.field.is_rational() and prime.f != 1):
            raise InvalidRepresentation(f"{prime} is not a prime of the field")
        bound = prime.norm ** theta * (1 + BOUND_TOLERANCE)
        if any(abs(alpha) > bound for alpha in alphas):
            raise InvalidRepresentation(
                f"Satake parameter at {prime} exceeds N(p)^theta = {bound}"
            )
        if prime not in self.conductor.primes and any(
            alpha == 0 for alpha in alphas
        ):
            raise InvalidRepresentation(
                f"vanishing Satake parameter at unramified {prime}"
            )

    @property
    def field_degree(self) -> int:
        """Return [F:Q].

        :return: degree of the base field
        """
        return self.field.degree

    def is_ramified(self, prime: PrimeIdeal) -> bool:
        """Return whether prime divides the conductor.

        :param prime: prime ideal
        :return: whether prime | q
        """
        return prime in self.conductor.primes

    def has_satake(self, prime: PrimeIdeal) -> bool:
        """Return whether Satake data is known at prime.

        :param prime: prime ideal
        :return: whether satake_at would succeed
        """
        return prime in self.satake or self.character is not None

    def satake_at(self, prime: PrimeIdeal) -> T.Tuple[complex, ...]:
        """Return the Satake parameters at a prime ideal.

        :param prime: prime ideal
        :return: n complex numbers
        """
        try:
            return self.satake[prime]
        except KeyError:
            pass
        if self.character is not None and prime.f == 1:
            return (self.character(prime.p),)
        raise MissingSatakeData(
            f"no Satake parameters for {self.label or 'rep'} at {prime}"
        )

    def contragredient(self) -> "AutomorphicRepData":
        """Return the contragredient representation.

        :return: data with conjugated Satake and archimedean parameters
        """
        return dataclasses.replace(
            self,
            satake={
                prime: tuple(alpha.conjugate() for alpha in alphas)
                for prime, alphas in self.satake.items()
            },
            arch=tuple(
                tuple(mu.conjugate() for mu in place) for place in self.arch
            ),
            character=(
                self.character.conjugate() if self.character else None
            ),
            label=f"{self.label}~" if self.label else "",
        )


def analytic_conductor(rep: AutomorphicRepData, t: float = 0.0) -> float:
    """Return the analytic conductor C(rep, t).

    :param rep: representation data
    :param t: height
    :return: D^n N(q) times the archimedean factors 3 + |it + mu|^d(v)
    """
    ret = float(rep.field.discriminant_norm ** rep.n * rep.conductor.norm)
    for place, local_degree in zip(rep.arch, rep.field.place_degrees()):
        for mu in place:
            ret *= 3 + abs(1j * t + mu) ** local_degree
    return ret


def log_analytic_conductor(rep: AutomorphicRepData, t: float = 0.0) -> float:
    """Return log C(rep, t).

    :param rep: representation data
    :param t: height
    :return: natural logarithm of the analytic conductor
    """
    return math.log(analytic_conductor(rep, t))


@dataclass(frozen=True)
class Family:
    """Finite family of representations with analytic conductor at most Q."""

    members: T.Tuple[AutomorphicRepData, ...]
    Q: float

    def __post_init__(self) -> None:
        """Check every member against the conductor cap."""
        object.__setattr__(self, "members", tuple(self.members))
        for member in self.members:
            conductor = analytic_conductor(member)
            if conductor > self.Q * (1 + BOUND_TOLERANCE):
                raise InvalidFamily(
                    f"{member.label or 'member'} has analytic conductor "
                    f"{conductor} > Q = {self.Q}"
                )

    @classmethod
    def of(cls, members: T.Iterable[AutomorphicRepData]) -> "Family":
        """Build a family whose cap is the largest member conductor.

        :param members: representations
        :return: family
        """
        members = tuple(members)
        return cls(
            members=members,
            Q=max(
                (analytic_conductor(member) for member in members),
                default=1.0,
            ),
        )

    def __len__(self) -> int:
        """Return the family size.

        :return: number of members
        """
        return len(self.members)

    def __iter__(self) -> T.Iterator[AutomorphicRepData]:
        """Iterate over the members.

        :return: iterator
        """
        return iter(self.members)

    @property
    def degree(self) -> int:
        """Return the common degree n of the members.

        :return: degree, 1 for an empty family
        """
        degrees = {member.n for member in self.members}
        if len(degrees) > 1:
            raise InvalidFamily(f"mixed degrees in family: {sorted(degrees)}")
        return degrees.pop() if degrees else 1

    @property
    def field(self) -> FieldSpec:
        """Return the common base field.

        :return: base field, Q for an empty family
        """
        if not self.members:
            return FieldSpec.rationals()
        return self.members[0].field

    def is_character_family(self) -> bool:
        """Return whether every member comes from a Dirichlet character.

        :return: whether the family is GL(1) over Q given by characters
        """
        return all(member.character is not None for member in self.members)


def character_rep(
    chi: DirichletCharacter, primitive: bool = True
) -> AutomorphicRepData:
    """Return GL(1) data of a Dirichlet character.

    The conductor is the modulus of chi. Imprimitive characters are accepted
    only when primitive is False, for complete character groups.

    :param chi: Dirichlet character
    :param primitive: whether to insist on a primitive character
    :return: representation data with alpha(p) = chi(p)
    """
    if primitive and not chi.is_primitive():
        raise NonPrimitiveCharacter(f"{chi} is not primitive")
    return AutomorphicRepData(
        n=1,
        conductor=IdealFactorization.of_integer(chi.modulus),
        arch=((complex((1 - chi.parity) // 2),),),
        pole_order=1 if chi.is_principal() else 0,
        theta=0.0,
        character=chi,
        label=str(chi),
    )


def character_family(
    q_max: T.Optional[int] = None, Q: T.Optional[float] = None
) -> Family:
    """Return primitive characters by modulus cap or analytic conductor cap.

    :param q_max: largest modulus, ignored when Q is given
    :param Q: cap on the analytic conductor C(chi) = q (3 + mu)
    :return: family ordered by modulus, then index
    """
    if Q is None and q_max is None:
        raise ValueError("either q_max or Q is required")
    limit = int(Q // 3) if Q is not None else T.cast(int, q_max)
    members = [
        character_rep(chi)
        for modulus in range(1, limit + 1)
        for chi in primitive_characters(modulus)
    ]
    if Q is not None:
        return Family(
            members=tuple(
                member
                for member in members
                if analytic_conductor(member) <= Q
            ),
            Q=Q,
        )
    return Family.of(members)
