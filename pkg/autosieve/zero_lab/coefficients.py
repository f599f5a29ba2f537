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

"""Von Mangoldt type coefficients of L(s, pi) and the Mertens-type bound."""

import math
import typing as T

import numpy as np
from dataclasses import dataclass, field

from autosieve.core.arith import CHEBYSHEV_PSI, von_mangoldt_array
from autosieve.core.characters import DirichletCharacter
from autosieve.core.ideals import PrimeIdeal
from autosieve.core.rep import (
    AutomorphicRepData,
    character_rep,
    log_analytic_conductor,
)

Source = T.Union[DirichletCharacter, AutomorphicRepData]


def _as_rep(source: Source) -> AutomorphicRepData:
    if isinstance(source, DirichletCharacter):
        return character_rep(source, primitive=False)
    return source


def lambda_array(chi: DirichletCharacter, N: int) -> np.ndarray:
    """Return Lambda_chi(n) = chi(n) Lambda(n) for n = 0..N.

    :param chi: Dirichlet character
    :param N: inclusive upper bound
    :return: complex array of length N + 1
    """
    return von_mangoldt_array(N) * chi.values(np.arange(N + 1))


def _prime_power_terms(
    rep: AutomorphicRepData, N: int
) -> T.Iterator[T.Tuple[int, PrimeIdeal, int, complex]]:
    for prime in rep.field.prime_ideals_up_to(N):
        alphas = np.array(rep.satake_at(prime), dtype=np.complex128)
        log_norm = math.log(prime.norm)
        norm, exponent = prime.norm, 1
        while norm <= N:
            yield (
                norm,
                prime,
                exponent,
                complex(np.sum(alphas ** exponent)) * log_norm,
            )
            norm *= prime.norm
            exponent += 1


def lambda_coefficients(source: Source, N: int) -> T.Dict[int, complex]:
    """Return the coefficients of -L'/L(s, pi) up to norm N.

    Lambda_pi(p^k) = (sum of alpha_j^k) log N(p). Values of distinct
    ideals with the same norm are added up.

    :param source: Dirichlet character or representation data
    :param N: largest norm
    :return: norm -> coefficient, over prime power norms only
    """
    if isinstance(source, DirichletCharacter):
        values = lambda_array(source, N)
        support = np.flatnonzero(von_mangoldt_array(N))
        return {int(norm): complex(values[norm]) for norm in support}
    ret: T.Dict[int, complex] = {}
    for norm, _prime, _exponent, value in _prime_power_terms(source, N):
        ret[norm] = ret.get(norm, 0j) + value
    return dict(sorted(ret.items()))


@dataclass
class MertensReport:
    """Both sides of the Mertens-type bound and the pointwise check."""

    eta: float
    N: int
    truncated_sum: float
    tail_bound: float
    rhs: float
    pointwise_checked: int
    pointwise_max_excess: float
    flags: T.Dict[str, bool] = field(default_factory=dict)

    @property
    def lhs(self) -> float:
        """Return the truncated sum with the tail bound folded in.

        :return: upper bound for sum of |Lambda_pi(n)| / N(n)^(1 + eta)
        """
        return self.truncated_sum + self.tail_bound


def mertens_tail_bound(
    n: int, field_degree: int, eta: float, N: int
) -> float:
    """Bound sum over N(n) > N of |Lambda_pi(n)| / N(n)^(1 + eta).

    Partial summation against psi(x) <= 1.03883 x, with |alpha| <= 1.

    :param n: degree of pi
    :param field_degree: [F:Q]
    :param eta: exponent shift, positive
    :param N: truncation point
    :return: n [F:Q] 1.03883 (1 + eta) N^-eta / eta
    """
    return (
        n * field_degree * CHEBYSHEV_PSI * (1 + eta) * N ** (-eta) / eta
    )


def mertens_sum(source: Source, eta: float, N: int) -> MertensReport:
    """Evaluate both sides of sum |Lambda_pi(n)| N(n)^(-1-eta) <= RHS.

    The right hand side is 1/eta + n log C(pi). Every term is also checked
    against 2|Lambda_pi(n)| <= Lambda_{pi x pi~}(n) + Lambda_F(n).

    :param source: Dirichlet character or representation data
    :param eta: exponent shift in (0, 1]
    :param N: truncation point
    :return: report
    """
    if not 0 < eta <= 1:
        raise ValueError(f"eta must lie in (0, 1], got {eta}")
    rep = _as_rep(source)

    if rep.character is not None:
        mangoldt = von_mangoldt_array(N)
        chi_values = rep.character.values(np.arange(N + 1))
        support = np.flatnonzero(mangoldt)
        moduli = np.abs(chi_values[support])
        weights = mangoldt[support]
        lhs_terms = moduli * weights
        truncated = math.fsum(lhs_terms * support ** (-1.0 - eta))
        excess = 2 * lhs_terms - (moduli ** 2 * weights + weights)
        checked = len(support)
    else:
        truncated_terms = []
        excess_terms = []
        for norm, prime, exponent, value in _prime_power_terms(rep, N):
            alphas = np.array(rep.satake_at(prime), dtype=np.complex128)
            log_norm = math.log(prime.norm)
            self_rs = abs(np.sum(alphas ** exponent)) ** 2 * log_norm
            truncated_terms.append(abs(value) * norm ** (-1.0 - eta))
            excess_terms.append(2 * abs(value) - self_rs - log_norm)
        truncated = math.fsum(truncated_terms)
        excess = np.array(excess_terms)
        checked = len(excess_terms)

    return MertensReport(
        eta=eta,
        N=N,
        truncated_sum=truncated,
        tail_bound=mertens_tail_bound(rep.n, rep.field_degree, eta, N),
        rhs=1 / eta + rep.n * log_analytic_conductor(rep),
        pointwise_checked=checked,
        pointwise_max_excess=float(np.max(excess)) if checked else 0.0,
        flags={"tail_assumes_ramanujan": T.cast(float, rep.theta) > 0},
    )
