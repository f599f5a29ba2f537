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

"""Large sieve experiments on concrete families.

Every experiment returns both sides of a large sieve type inequality with
the implied constant stripped; the quotient is measured, never asserted.
"""

import math
import typing as T

import numpy as np
import scipy.integrate
from dataclasses import dataclass, field

from autosieve.core.arith import primes_up_to
from autosieve.core.ideals import FieldSpec, IdealFactorization, PrimeIdeal
from autosieve.core.rep import AutomorphicRepData, Family, default_theta
from autosieve.core.sampling import random_satake, spawn_rngs
from autosieve.errors import MissingSatakeData
from autosieve.schur_rs import hecke_eigenvalue

Coefficients = T.Mapping[IdealFactorization, complex]
Items = T.List[T.Tuple[IdealFactorization, complex]]
Mapper = T.Callable[..., T.Iterable[T.Any]]

QUADRATURE_RELATIVE_TOLERANCE = 1e-6
QUADRATURE_LIMIT = 500
LOG_FLOAT_MAX = 700.0


@dataclass
class RatioReport:
    """Measured side of an inequality against its envelope."""

    lhs: float
    rhs_envelope: float
    family_size: int
    coefficient_mass: float
    parameters: T.Dict[str, T.Any] = field(default_factory=dict)
    log_rhs_envelope: T.Optional[float] = None
    flags: T.Dict[str, bool] = field(default_factory=dict)

    @property
    def ratio(self) -> float:
        """Return lhs / rhs_envelope.

        :return: ratio, 0 for an empty envelope
        """
        if self.rhs_envelope <= 0:
            return 0.0
        return self.lhs / self.rhs_envelope


def _exp_or_inf(value: float) -> float:
    return math.exp(value) if value < LOG_FLOAT_MAX else math.inf


def sample_unitary_family(
    n: int,
    count: int,
    field_spec: T.Optional[FieldSpec] = None,
    primes_up_to_norm: int = 100,
    seed: T.Optional[int] = None,
    theta: float = 0.0,
) -> Family:
    """Draw a family with random Satake parameters and trivial conductor.

    Parameters at a prime of norm N(p) lie on the circle of radius
    N(p)^t with t uniform in [-theta, theta].

    :param n: degree
    :param count: number of members
    :param field_spec: base field, Q when omitted
    :param primes_up_to_norm: largest prime norm carrying Satake data
    :param seed: seed of the family
    :param theta: Ramanujan margin
    :return: family
    """
    if count < 1:
        raise ValueError("family needs at least one member")
    if not 0 <= theta <= default_theta(n):
        raise ValueError(
            f"theta must lie in [0, {default_theta(n)}], got {theta}"
        )
    field_spec = field_spec or FieldSpec.rationals()
    primes = field_spec.prime_ideals_up_to(primes_up_to_norm)
    members = []
    for index, rng in enumerate(spawn_rngs(seed, count)):
        members.append(
            AutomorphicRepData(
                n=n,
                field=field_spec,
                satake={
                    prime: tuple(random_satake(rng, n, prime.norm, theta))
                    for prime in primes
                },
                theta=theta,
                label=f"sample-{index}",
            )
        )
    return Family.of(members)


def _eigenvalue(rep: AutomorphicRepData, ideal: IdealFactorization) -> complex:
    if not ideal.coprime_to(rep.conductor):
        return 0j
    return hecke_eigenvalue(rep, ideal)


def _member_sum(
    task: T.Tuple[AutomorphicRepData, Items]
) -> float:
    rep, items = task
    if rep.character is not None:
        norms = np.array([ideal.norm for ideal, _ in items], dtype=np.int64)
        values = np.array([value for _, value in items], dtype=np.complex128)
        total = complex(np.sum(rep.character.values(norms) * values))
    else:
        total = sum(
            (_eigenvalue(rep, ideal) * value for ideal, value in items), 0j
        )
    return abs(total) ** 2


def bilinear_lhs(
    family: Family,
    items: Items,
    mapper: Mapper = map,
) -> float:
    """Return sum over members of |sum over n of lambda(n) a(n)|^2.

    Terms with n not coprime to the member conductor are dropped.

    :param family: family
    :param items: (ideal, coefficient) pairs
    :param mapper: map-like callable spreading members over workers
    :return: nonnegative double sum
    """
    return math.fsum(
        mapper(_member_sum, [(member, items) for member in family])
    )


def _mass(items: T.Iterable[T.Tuple[IdealFactorization, complex]]) -> float:
    return math.fsum(abs(value) ** 2 for _ideal, value in items)


def large_sieve_ratio(
    family: Family,
    coeffs: Coefficients,
    N: int,
    mapper: Mapper = map,
) -> RatioReport:
    """Measure the large sieve for a family against (N + Q^(n^2+n)|F|).

    Character families use the classical envelope N + |F|.

    :param family: family
    :param coeffs: coefficients a(n), only N(n) <= N is used
    :param N: length of the sum
    :param mapper: map-like callable spreading members over workers
    :return: ratio report
    """
    items = sorted(
        ((ideal, value) for ideal, value in coeffs.items() if ideal.norm <= N),
        key=lambda item: item[0].sort_key(),
    )
    mass = _mass(items)
    size = len(family)
    if family.is_character_family():
        log_factor = math.log(N + size)
    else:
        n = family.degree
        log_factor = np.logaddexp(
            math.log(N), (n * n + n) * math.log(family.Q) + math.log(size)
        )
    log_envelope = (
        float(log_factor) + math.log(mass) if mass > 0 else -math.inf
    )
    return RatioReport(
        lhs=bilinear_lhs(family, items, mapper),
        rhs_envelope=_exp_or_inf(log_envelope) if mass > 0 else 0.0,
        family_size=size,
        coefficient_mass=mass,
        parameters={"N": N, "Q": family.Q},
        log_rhs_envelope=log_envelope if mass > 0 else None,
    )


def _is_prime_ideal(ideal: IdealFactorization) -> bool:
    return len(ideal.factors) == 1 and ideal.factors[0][1] == 1


def _window_items(
    coeffs: Coefficients, low: float, high: float, primes_only: bool
) -> Items:
    return sorted(
        (
            (ideal, value)
            for ideal, value in coeffs.items()
            if low < ideal.norm <= high
            and (not primes_only or _is_prime_ideal(ideal))
        ),
        key=lambda item: item[0].sort_key(),
    )


def prime_window_ratio(
    family: Family,
    x: float,
    T: float,
    z: float,
    coeffs: Coefficients,
    mapper: Mapper = map,
) -> RatioReport:
    """Measure the large sieve over primes in (x, x e^(1/T)] above z.

    Without sifting, z at most 1, the envelope is infinite.

    :param family: family
    :param x: start of the window
    :param T: inverse logarithmic width of the window
    :param z: sifting level, primes of norm at most z are excluded
    :param coeffs: coefficients on prime ideals
    :param mapper: map-like callable spreading members over workers
    :return: ratio report, flagged with whether z honours the nominal
        threshold Q^(2(n^2+n+1))
    """
    items = _window_items(
        coeffs, max(x, z), x * math.exp(1 / T), primes_only=True
    )
    mass = _mass(items)
    size = len(family)
    n = family.degree
    degree = family.field.degree
    log_q = math.log(family.Q)
    log_z = math.log(z) if z > 0 else -math.inf
    log_envelope = None
    envelope = 0.0
    if mass > 0 and log_z <= 0:
        # without sifting x / (T log z) is unbounded
        log_envelope = math.inf
        envelope = math.inf
    elif mass > 0:
        log_envelope = float(
            np.logaddexp(
                math.log(x / (T * log_z)),
                (n * n + n + 1) * log_q
                + degree * n * n * math.log(T)
                + (2 * n * n + 3) * log_z
                + math.log(size),
            )
            + math.log(mass)
        )
        envelope = _exp_or_inf(log_envelope)
    return RatioReport(
        lhs=bilinear_lhs(family, items, mapper),
        rhs_envelope=envelope,
        family_size=size,
        coefficient_mass=mass,
        parameters={"x": x, "T": T, "z": z, "Q": family.Q},
        log_rhs_envelope=log_envelope,
        flags={
            "threshold_honoured": log_z >= 2 * (n * n + n + 1) * log_q
        },
    )


def dyadic_window_ratio(
    family: Family,
    x: float,
    coeffs: Coefficients,
    mapper: Mapper = map,
) -> RatioReport:
    """Measure the large sieve over n in (x, e x] against
    Q (x + Q^(n^2+n)|F|).

    :param family: family
    :param x: start of the window
    :param coeffs: coefficients a(n)
    :param mapper: map-like callable spreading members over workers
    :return: ratio report
    """
    items = _window_items(coeffs, x, math.e * x, primes_only=False)
    mass = _mass(items)
    size = len(family)
    n = family.degree
    log_q = math.log(family.Q)
    log_envelope = None
    envelope = 0.0
    if mass > 0:
        log_envelope = float(
            log_q
            + np.logaddexp(math.log(x), (n * n + n) * log_q + math.log(size))
            + math.log(mass)
        )
        envelope = _exp_or_inf(log_envelope)
    return RatioReport(
        lhs=bilinear_lhs(family, items, mapper),
        rhs_envelope=envelope,
        family_size=size,
        coefficient_mass=mass,
        parameters={"x": x, "Q": family.Q},
        log_rhs_envelope=log_envelope,
    )


def dirichlet_polynomial_mean(
    coeffs: T.Mapping[int, complex], T: float
) -> float:
    """Return the integral over [-T, T] of |sum b(n) n^(-it)|^2 dt.

    :param coeffs: finitely supported coefficients b(n)
    :param T: half length of the range
    :return: integral by adaptive quadrature
    """
    support = sorted(n for n, value in coeffs.items() if value != 0)
    if not support:
        return 0.0
    logs = np.log(np.array(support, dtype=np.float64))
    values = np.array([coeffs[n] for n in support], dtype=np.complex128)

    def _integrand(t: float) -> float:
        return float(np.abs(np.sum(values * np.exp(-1j * t * logs))) ** 2)

    # split into pieces of bounded oscillation
    pieces = max(1, math.ceil(T * float(logs[-1] - logs[0]) / math.pi))
    edges = np.linspace(-T, T, pieces + 1)
    return math.fsum(
        scipy.integrate.quad(
            _integrand,
            left,
            right,
            epsrel=QUADRATURE_RELATIVE_TOLERANCE,
            limit=QUADRATURE_LIMIT,
        )[0]
        for left, right in zip(edges, edges[1:])
    )


def window_mean(coeffs: T.Mapping[int, complex], T: float) -> float:
    """Return T^2 times the integral over x > 0 of |window sum|^2 dx/x.

    The window sum over n in (x, x e^(1/T)] is piecewise constant with
    breakpoints at n and n e^(-1/T), so the integral is an exact finite sum.

    :param coeffs: finitely supported coefficients b(n)
    :param T: inverse logarithmic width of the window
    :return: integral
    """
    support = sorted(n for n, value in coeffs.items() if value != 0)
    if not support:
        return 0.0
    norms = np.array(support, dtype=np.float64)
    values = np.array([coeffs[n] for n in support], dtype=np.complex128)
    prefix = np.concatenate([[0j], np.cumsum(values)])
    breaks = np.unique(np.concatenate([norms, norms * math.exp(-1 / T)]))
    left, right = breaks[:-1], breaks[1:]
    middle = np.sqrt(left * right)
    upper = np.searchsorted(norms, middle * math.exp(1 / T), side="right")
    lower = np.searchsorted(norms, middle, side="right")
    sums = prefix[upper] - prefix[lower]
    return float(
        T * T * np.sum(np.abs(sums) ** 2 * np.log(right / left))
    )


def gallagher_check(
    coeffs: T.Mapping[int, complex], T: float
) -> T.Tuple[float, float]:
    """Return both sides of Gallagher's mean value lemma.

    :param coeffs: finitely supported coefficients b(n)
    :param T: height
    :return: (mean square of the Dirichlet polynomial, window mean)
    """
    return dirichlet_polynomial_mean(coeffs, T), window_mean(coeffs, T)


def _prime_terms(
    rep: AutomorphicRepData, primes: T.Sequence[PrimeIdeal]
) -> T.Tuple[np.ndarray, np.ndarray]:
    logs = []
    values = []
    for prime in primes:
        if rep.is_ramified(prime):
            continue
        try:
            alphas = rep.satake_at(prime)
        except MissingSatakeData:
            continue
        log_norm = math.log(prime.norm)
        logs.append(log_norm)
        values.append(sum(alphas) * log_norm / prime.norm)
    return (
        np.array(logs, dtype=np.float64),
        np.array(values, dtype=np.complex128),
    )


def _mvt_member(
    task: T.Tuple[AutomorphicRepData, T.List[PrimeIdeal], float]
) -> float:
    rep, primes, T_height = task
    logs, values = _prime_terms(rep, primes)
    if not len(logs):
        return 0.0

    def _integrand(t: float) -> float:
        return float(np.abs(np.sum(values * np.exp(-1j * t * logs))) ** 2)

    pieces = max(
        1, math.ceil(T_height * float(logs[-1] - logs[0]) / math.pi)
    )
    edges = np.linspace(-T_height, T_height, pieces + 1)
    return math.fsum(
        scipy.integrate.quad(
            _integrand,
            left,
            right,
            epsrel=QUADRATURE_RELATIVE_TOLERANCE,
            limit=QUADRATURE_LIMIT,
        )[0]
        for left, right in zip(edges, edges[1:])
    )


def mvt_primes_sum(
    family: Family, y: float, u: float, T: float, mapper: Mapper = map
) -> float:
    """Return the prime mean value sum over the family.

    This is the sum over members of the integral over [-T, T] of
    |sum over y < N(p) <= u of lambda(p) log N(p) / N(p)^(1+it)|^2.

    :param family: family
    :param y: lower end of the prime range
    :param u: upper end of the prime range
    :param T: height
    :param mapper: map-like callable spreading members over workers
    :return: value by quadrature
    """
    if u < y:
        raise ValueError(f"empty range: u={u} < y={y}")
    primes = [
        prime
        for prime in family.field.prime_ideals_up_to(u)
        if prime.norm > y
    ]
    return math.fsum(
        mapper(_mvt_member, [(member, primes, T) for member in family])
    )


@dataclass
class MvtParameters:
    """Nominal parameters of the prime mean value estimate, in log form."""

    log_y: float
    log_z: float
    log_u_min: float
    log_u_max: float
    honoured: bool


def mvt_nominal_parameters(
    family: Family, T: float, y: float, u: float
) -> MvtParameters:
    """Return the nominal parameter ranges and whether a run honours them.

    :param family: family
    :param T: height
    :param y: lower end used by the run
    :param u: upper end used by the run
    :return: log y = 60 n^4 log(Q T^[F:Q]), z = y^(6/(60 n^2)) and
        u in [y, y^12000]
    """
    n = family.degree
    log_y = 60 * n ** 4 * (
        math.log(family.Q) + family.field.degree * math.log(T)
    )
    return MvtParameters(
        log_y=log_y,
        log_z=6 / (60 * n * n) * log_y,
        log_u_min=log_y,
        log_u_max=12000 * log_y,
        honoured=math.log(y) >= log_y and math.log(u) <= 12000 * log_y,
    )


def trivial_mvt_bound(y: float, u: float, T: float) -> float:
    """Return 2T times the sum over y < p <= u of (log p / p)^2.

    :param y: lower end
    :param u: upper end
    :param T: height
    :return: diagonal bound for a unimodular coefficient family member
    """
    return 2 * T * math.fsum(
        (math.log(p) / p) ** 2 for p in primes_up_to(int(u)) if p > y
    )
