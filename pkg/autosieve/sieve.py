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

"""Local densities, Selberg sieve weights and smoothed Rankin-Selberg sums."""

import math
import typing as T

import numpy as np
from dataclasses import dataclass, field

from autosieve.core.arith import euler_phi
from autosieve.core.ideals import (
    IdealFactorization,
    PrimeIdeal,
    ideals_up_to,
)
from autosieve.core.rep import AutomorphicRepData
from autosieve.errors import (
    IndefiniteGramMatrix,
    NotSquarefreeError,
    NumericalError,
    UnsupportedRepresentation,
)
from autosieve.schur_rs import check_unramified, rs_coefficient_ideal
from autosieve.zero_lab.testfunc import TestFunction, laplace_transform

PSD_TOLERANCE = 1e-10
DENSITY_IMAGINARY_TOLERANCE = 1e-10
BLOCK_SIZE = 1 << 20


def local_density(
    repA: AutomorphicRepData,
    repB: AutomorphicRepData,
    d: IdealFactorization,
    s: complex = 1.0,
) -> complex:
    """Return g_d(s) = prod over p | d of (1 - L_p(s, A x B~)^(-1)).

    :param repA: first representation
    :param repB: second representation, dualized inside
    :param d: squarefree ideal coprime to both conductors
    :param s: complex point
    :return: local density
    """
    if not d.is_squarefree():
        raise NotSquarefreeError(f"{d} is not squarefree")
    check_unramified(d, repA, repB)
    ret = 1 + 0j
    for prime in d.primes:
        x = prime.norm ** (-complex(s))
        inverse_factor = 1 + 0j
        for alpha in repA.satake_at(prime):
            for beta in repB.satake_at(prime):
                inverse_factor *= 1 - alpha * beta.conjugate() * x
        ret *= 1 - inverse_factor
    return ret


def density(rep: AutomorphicRepData, prime: PrimeIdeal) -> float:
    """Return g(p) = local_density(rep, rep, p, 1) as a real number.

    :param rep: representation
    :param prime: unramified prime ideal
    :return: g(p)
    """
    value = local_density(rep, rep, IdealFactorization.of_prime(prime), 1)
    if abs(value.imag) > DENSITY_IMAGINARY_TOLERANCE:
        raise NumericalError(f"density at {prime} is not real: {value}")
    return value.real


@dataclass
class SieveWeights:
    """Selberg weights on the squarefree ideals of norm at most z."""

    z: float
    support: T.List[IdealFactorization]
    rho: T.Dict[IdealFactorization, float]
    diagonal: float
    closed_form_diagonal: T.Optional[float]
    densities: T.Dict[PrimeIdeal, float] = field(default_factory=dict)
    flagged: T.List[PrimeIdeal] = field(default_factory=list)
    min_eigenvalue: float = 1.0

    def weight(self, d: IdealFactorization) -> float:
        """Return rho(d), zero off the support.

        :param d: ideal
        :return: weight
        """
        return self.rho.get(d, 0.0)

    def max_weight(self) -> float:
        """Return the largest |rho(d)|.

        :return: sup norm of the weights
        """
        return max(abs(value) for value in self.rho.values())


def _sieve_support(
    primes: T.Sequence[PrimeIdeal], z: float
) -> T.List[IdealFactorization]:
    ret: T.List[IdealFactorization] = []

    def _extend(start: int, norm: int, chosen: T.List[PrimeIdeal]) -> None:
        ret.append(IdealFactorization(tuple((p, 1) for p in chosen)))
        for i in range(start, len(primes)):
            if norm * primes[i].norm > z:
                break
            _extend(i + 1, norm * primes[i].norm, chosen + [primes[i]])

    _extend(0, 1, [])
    return sorted(ret, key=IdealFactorization.sort_key)


def closed_form_diagonal(
    densities: T.Mapping[PrimeIdeal, float],
    support: T.Iterable[IdealFactorization],
) -> T.Optional[float]:
    """Return (sum over d of prod over p | d of g/(1 - g))^(-1).

    :param densities: g at every prime of the support
    :param support: divisor-closed set of squarefree ideals
    :return: closed form of the minimum, None when some g equals 1
    """
    total = 0.0
    for d in support:
        term = 1.0
        for prime in d.primes:
            g = densities[prime]
            if g == 1:
                return None
            term *= g / (1 - g)
        total += term
    return 1 / total


def selberg_weights_from_density(
    densities: T.Mapping[PrimeIdeal, float],
    z: float,
    psd_tolerance: float = PSD_TOLERANCE,
) -> SieveWeights:
    """Minimize sum rho(d) rho(e) g([d, e]) subject to rho(O_F) = 1.

    Only primes with norm below z and nonzero density take part.

    :param densities: g(p) for candidate primes
    :param z: sieve level
    :param psd_tolerance: relative tolerance of the semidefiniteness check
    :return: weights with their diagonal value
    """
    primes = sorted(
        prime
        for prime, g in densities.items()
        if prime.norm < z and g != 0
    )
    used = {prime: float(densities[prime]) for prime in primes}
    support = _sieve_support(primes, z)
    gram = np.array(
        [
            [math.prod(used[p] for p in d.lcm(e).primes) for e in support]
            for d in support
        ]
    )
    eigenvalues = np.linalg.eigvalsh(gram)
    min_eigenvalue = float(eigenvalues[0])
    if min_eigenvalue < -psd_tolerance * max(1.0, float(eigenvalues[-1])):
        raise IndefiniteGramMatrix(min_eigenvalue)

    size = len(support)
    system = np.zeros((size + 1, size + 1))
    system[:size, :size] = 2 * gram
    system[0, size] = system[size, 0] = 1
    rhs = np.zeros(size + 1)
    rhs[size] = 1
    solution = np.linalg.lstsq(system, rhs, rcond=None)[0]
    rho = solution[:size]
    rho[0] = 1.0
    return SieveWeights(
        z=z,
        support=support,
        rho={d: float(value) for d, value in zip(support, rho)},
        diagonal=float(rho @ gram @ rho),
        closed_form_diagonal=closed_form_diagonal(used, support),
        densities=used,
        flagged=[prime for prime, g in used.items() if not 0 < g < 1],
        min_eigenvalue=min_eigenvalue,
    )


def selberg_weights(
    rep: AutomorphicRepData,
    z: float,
    psd_tolerance: float = PSD_TOLERANCE,
) -> SieveWeights:
    """Build Selberg weights from the densities of rep x rep~.

    The sifting primes are the unramified prime ideals of norm below z with
    nonzero density.

    :param rep: representation
    :param z: sieve level
    :param psd_tolerance: relative tolerance of the semidefiniteness check
    :return: weights
    """
    densities = {
        prime: density(rep, prime)
        for prime in rep.field.prime_ideals_up_to(math.ceil(z) - 1)
        if prime.norm < z and not rep.is_ramified(prime)
    }
    return selberg_weights_from_density(densities, z, psd_tolerance)


@dataclass
class SmoothedSumReport:
    """Smoothed Rankin-Selberg sum against its main term."""

    x: float
    T: float
    direct_sum: complex
    main_term: complex
    kappa: float
    density: complex
    terms: int

    @property
    def residual(self) -> complex:
        """Return direct_sum - main_term.

        :return: residual
        """
        return self.direct_sum - self.main_term

    @property
    def relative_residual(self) -> float:
        """Return |residual| / x.

        :return: residual relative to the length of the sum
        """
        return abs(self.residual) / self.x


def character_kappa(
    repA: AutomorphicRepData, repB: AutomorphicRepData
) -> float:
    """Return the residue kappa of L(s, A x B~) with ramified factors removed.

    :param repA: first character representation
    :param repB: second character representation
    :return: phi(q)/q when both come from the same character, else 0
    """
    if repA.character is None or repB.character is None:
        raise UnsupportedRepresentation("kappa is known for characters only")
    if repA.character != repB.character:
        return 0.0
    modulus = repA.character.modulus
    return euler_phi(modulus) / modulus


def _character_block(
    task: T.Tuple[AutomorphicRepData, AutomorphicRepData, int, int, int]
) -> T.Tuple[np.ndarray, np.ndarray]:
    repA, repB, step, start, stop = task
    norms = np.arange(start, stop, dtype=np.int64) * step
    chi_a = T.cast(T.Any, repA.character)
    chi_b = T.cast(T.Any, repB.character)
    return norms, chi_a.values(norms) * np.conj(chi_b.values(norms))


def _character_coefficients(
    repA: AutomorphicRepData,
    repB: AutomorphicRepData,
    d: IdealFactorization,
    low: float,
    high: float,
    mapper: T.Callable[..., T.Iterable[T.Any]],
) -> T.Iterator[T.Tuple[np.ndarray, np.ndarray]]:
    step = d.norm
    first = max(1, math.ceil(low / step))
    last = math.floor(high / step)
    tasks = [
        (repA, repB, step, start, min(start + BLOCK_SIZE, last + 1))
        for start in range(first, last + 1, BLOCK_SIZE)
    ]
    yield from mapper(_character_block, tasks)


def _ideal_coefficients(
    repA: AutomorphicRepData,
    repB: AutomorphicRepData,
    d: IdealFactorization,
    low: float,
    high: float,
) -> T.Iterator[T.Tuple[np.ndarray, np.ndarray]]:
    dual = repB.contragredient()
    norms = []
    values = []
    for ideal in ideals_up_to(repA.field, high):
        if ideal.norm < low or not d.divides(ideal):
            continue
        if not ideal.coprime_to(repA.conductor * repB.conductor):
            continue
        norms.append(ideal.norm)
        values.append(rs_coefficient_ideal(repA, dual, ideal))
    yield np.array(norms, dtype=np.float64), np.array(
        values, dtype=np.complex128
    )


def smoothed_rs_sum(
    repA: AutomorphicRepData,
    repB: AutomorphicRepData,
    d: IdealFactorization,
    x: float,
    T: float,
    phi: T.Optional[TestFunction] = None,
    kappa: T.Optional[float] = None,
    mapper: T.Callable[..., T.Iterable[T.Any]] = map,
) -> SmoothedSumReport:
    """Compare the smoothed sum of lambda_{A x B~} over multiples of d
    with its main term.

    :param repA: first representation
    :param repB: second representation
    :param d: squarefree unramified ideal
    :param x: length of the sum
    :param T: sharpness of the smoothing
    :param phi: smoothing weight, the default bump when omitted
    :param kappa: residue of the Rankin-Selberg function, computed for
        characters when omitted
    :param mapper: map-like callable spreading norm blocks over workers
    :return: report with direct sum and main term
    """
    phi = phi or TestFunction()
    if kappa is None:
        kappa = character_kappa(repA, repB)
    low_t, high_t = phi.support
    low, high = x * math.exp(low_t / T), x * math.exp(high_t / T)
    g = local_density(repA, repB, d, 1)

    if repA.character is not None and repB.character is not None:
        blocks = _character_coefficients(repA, repB, d, low, high, mapper)
    else:
        blocks = _ideal_coefficients(repA, repB, d, low, high)

    direct_sum = 0j
    terms = 0
    for norms, values in blocks:
        weights = phi(T * np.log(norms / x))
        direct_sum += complex(np.sum(values * weights))
        terms += int(np.count_nonzero(values))

    main_term = g * x * laplace_transform(phi, 1 / T) / T * kappa
    return SmoothedSumReport(
        x=x,
        T=T,
        direct_sum=direct_sum,
        main_term=complex(main_term),
        kappa=kappa,
        density=g,
        terms=terms,
    )


def residual_trend(
    ratios: T.Sequence[float], noise_floor: float
) -> T.Tuple[bool, T.List[float]]:
    """Check that relative residuals do not grow beyond a noise floor.

    :param ratios: |residual|/x for increasing x
    :param noise_floor: level below which fluctuations are ignored
    :return: whether the trend is nonincreasing, and the ratios
    """
    ok = all(
        later <= max(earlier, noise_floor)
        for earlier, later in zip(ratios, ratios[1:])
    )
    return ok, list(ratios)


def rs_partial_sum_lower(
    rep: AutomorphicRepData, z: float
) -> T.Tuple[float, float]:
    """Return both sides of the harmonic lower bound for lambda_{pi x pi~}.

    :param rep: Dirichlet character representation
    :param z: length of the sum
    :return: (sum over n <= z coprime to q of 1/n, (1 + kappa log z)/3)
    """
    if rep.character is None:
        raise UnsupportedRepresentation(
            "the partial sum bound is computed for Dirichlet characters only"
        )
    modulus = rep.character.modulus
    norms = np.arange(1, math.floor(z) + 1, dtype=np.int64)
    values = np.abs(rep.character.values(norms)) ** 2
    lhs = float(np.sum(values / norms))
    kappa = euler_phi(modulus) / modulus
    return lhs, (1 + kappa * math.log(z)) / 3
