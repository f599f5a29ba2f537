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

"""Zero counts of character families and explicit formula checks."""

import math
import typing as T

from dataclasses import dataclass, field

from autosieve.core.characters import DirichletCharacter
from autosieve.core.rep import Family, analytic_conductor, character_rep
from autosieve.errors import PoleError, UnsupportedRepresentation
from autosieve.zero_lab.lfunc import gamma_logderiv, l_value, log_derivatives
from autosieve.zero_lab.zeros import ZeroList, scan_zeros

Mapper = T.Callable[..., T.Iterable[T.Any]]
Scanner = T.Callable[[DirichletCharacter, float], ZeroList]

DENSITY_EXPONENT = 1e7
JUTILA_EPSILON = 1.0
MONTGOMERY_LOG_POWER = 13
IDENTITY_SLACK = 20.0
LOCAL_COUNT_SLACK = 2.0
SUBCONVEXITY_T = 6.0
SUBCONVEXITY_LOG_SHIFT = 1e9
SUBCONVEXITY_COUNT_SCALE = 1e7


def _default_scanner(chi: DirichletCharacter, T: float) -> ZeroList:
    return scan_zeros(chi, T)


def _characters(
    family: T.Union[Family, T.Iterable[DirichletCharacter]]
) -> T.Tuple[T.List[DirichletCharacter], float]:
    if isinstance(family, Family):
        if not family.is_character_family():
            raise UnsupportedRepresentation(
                "zero scans need a family of Dirichlet characters"
            )
        return (
            [T.cast(DirichletCharacter, rep.character) for rep in family],
            family.Q,
        )
    characters = list(family)
    return (
        characters,
        max(
            (analytic_conductor(character_rep(chi)) for chi in characters),
            default=1.0,
        ),
    )


@dataclass
class DensityReport:
    """Zero count of a family next to zero density envelopes."""

    sigma: float
    T: float
    Q: float
    family_size: int
    counts: T.Dict[str, int]
    log_envelope: float
    log_montgomery: T.Optional[float]
    log_jutila: T.Optional[float]
    regime_boundaries: T.Dict[str, float] = field(default_factory=dict)

    @property
    def count(self) -> int:
        """Return the total number of zeros with beta > sigma, |gamma| <= T.

        :return: count over the family
        """
        return sum(self.counts.values())

    @property
    def envelope(self) -> float:
        """Return the log-free envelope (Q T)^(10^7 (1 - sigma)).

        :return: envelope, inf when it overflows
        """
        if self.log_envelope >= 700:
            return math.inf
        return math.exp(self.log_envelope)


def density_envelopes(
    sigma: float, T: float, Q: float, family_size: int, n: int = 1
) -> T.Tuple[float, T.Optional[float], T.Optional[float]]:
    """Return the logarithms of three zero density envelopes.

    :param sigma: real part threshold
    :param T: height
    :param Q: conductor cap
    :param family_size: number of members
    :param n: degree
    :return: (log-free, Montgomery shape or None, Jutila shape or None)
    """
    log_qt = math.log(Q * T)
    log_free = DENSITY_EXPONENT * n ** 4 * (1 - sigma) * log_qt
    log_ft = math.log(family_size * T)
    montgomery = None
    if sigma >= 0.5:
        montgomery = min(3 / (2 - sigma), 2 / sigma) * (
            1 - sigma
        ) * log_ft + MONTGOMERY_LOG_POWER * math.log(log_qt)
    jutila = None
    if sigma >= 0.8:
        jutila = (2 + JUTILA_EPSILON) * (1 - sigma) * log_ft
    return log_free, montgomery, jutila


def zero_density_sum(
    family: T.Union[Family, T.Iterable[DirichletCharacter]],
    sigma: float,
    T: float,
    mapper: Mapper = map,
    scanner: Scanner = _default_scanner,
) -> DensityReport:
    """Count zeros with beta > sigma, |gamma| <= T over a character family.

    :param family: family of Dirichlet characters
    :param sigma: real part threshold in [0, 1]
    :param T: height, positive
    :param mapper: map-like callable spreading members over workers
    :param scanner: function returning the zeros of a character up to T
    :return: report
    """
    if not 0 <= sigma <= 1:
        raise ValueError(f"sigma must lie in [0, 1], got {sigma}")
    characters, Q = _characters(family)
    scans = list(mapper(lambda chi: scanner(chi, T), characters))
    log_free, montgomery, jutila = density_envelopes(
        sigma, T, Q, max(len(characters), 1)
    )
    log_qt = math.log(Q * T)
    return DensityReport(
        sigma=sigma,
        T=T,
        Q=Q,
        family_size=len(characters),
        counts={
            str(chi): zeros.count(sigma, T)
            for chi, zeros in zip(characters, scans)
        },
        log_envelope=log_free,
        log_montgomery=montgomery,
        log_jutila=jutila,
        regime_boundaries={
            "log_free": 1 - 1 / 400,
            "classical": 1 - 1 / (2 * log_qt),
        },
    )


@dataclass
class IdentityReport:
    """Partial sum over zeros against the explicit formula."""

    eta: float
    t: float
    partial: float
    analytic: float
    identity_bound: float
    local_count: int
    local_bound: float
    zero_count: int

    @property
    def gap(self) -> float:
        """Return analytic side minus partial sum.

        :return: contribution of the zeros outside the box
        """
        return self.analytic - self.partial


def explicit_formula_side(
    chi: DirichletCharacter, s: complex
) -> float:
    """Return Re(L'/L(s) + L_inf'/L_inf(s)) + (1/2) log q.

    :param chi: non-principal primitive Dirichlet character
    :param s: point right of the critical strip
    :return: sum over all zeros of Re(1 / (s - rho))
    """
    derivative = log_derivatives(chi, s, 0)[0]
    return float(
        (derivative + gamma_logderiv(chi, s)).real
        + math.log(chi.modulus) / 2
    )


def zero_sum_identity(
    chi: DirichletCharacter,
    eta: float,
    t: float,
    zeros: ZeroList,
    slack: float = IDENTITY_SLACK,
    local_slack: float = LOCAL_COUNT_SLACK,
) -> IdentityReport:
    """Compare sum over zeros of Re(1 / (s - rho)) with its closed form.

    Here s = 1 + eta + it. Every omitted zero adds a positive term, so the
    partial sum stays below the analytic side.

    :param chi: non-principal primitive Dirichlet character
    :param eta: scale, positive
    :param t: height
    :param zeros: zeros inside a box
    :param slack: calibrated constant of the bound on the full sum
    :param local_slack: calibrated constant of the local zero count bound
    :return: report
    """
    if chi.is_principal():
        raise PoleError(f"L(s, {chi}) has a pole at s = 1")
    if eta <= 0:
        raise ValueError(f"eta must be positive, got {eta}")
    s = complex(1 + eta, t)
    partial = math.fsum((1 / (s - rho)).real for rho in zeros)
    log_q = math.log(chi.modulus)
    return IdentityReport(
        eta=eta,
        t=t,
        partial=partial,
        analytic=explicit_formula_side(chi, s),
        identity_bound=2 * log_q + math.log(2 + abs(t)) + 2 / eta + slack,
        local_count=len(zeros.near(complex(1, t), eta)),
        local_bound=10 * eta * log_q
        + 5 * eta * math.log(2 + abs(t))
        + local_slack,
        zero_count=len(zeros),
    )


@dataclass
class SubconvexityReport:
    """Explicit terms of the subconvexity bound for L(1/2, chi)."""

    alpha: float
    log_conductor: float
    zero_count: int
    conductor_term: float
    zero_term: float
    l_term: float
    notes: T.List[str] = field(default_factory=list)

    @property
    def total(self) -> float:
        """Return the sum of the explicit terms.

        :return: bound for log |L(1/2, chi)| up to O(1)
        """
        return self.conductor_term + self.zero_term + self.l_term


def subconvexity_rhs(
    chi: DirichletCharacter,
    alpha: float,
    scanner: T.Optional[Scanner] = None,
) -> SubconvexityReport:
    """Evaluate the explicit terms bounding log |L(1/2, chi)|.

    The terms are (1/4 - alpha/10^9) log C(chi),
    (alpha/10^7) N(1 - alpha, 6) and 2 log |L(3/2, chi)|.

    :param chi: non-principal primitive Dirichlet character
    :param alpha: parameter in [0, 1/2)
    :param scanner: function returning the zeros of a character up to T
    :return: report
    """
    if chi.is_principal():
        raise PoleError(f"L(s, {chi}) has a pole at s = 1")
    if not 0 <= alpha < 0.5:
        raise ValueError(f"alpha must lie in [0, 1/2), got {alpha}")
    log_conductor = math.log(analytic_conductor(character_rep(chi)))
    count = 0
    if alpha > 0:
        zeros = (scanner or _default_scanner)(chi, SUBCONVEXITY_T)
        count = zeros.count(1 - alpha, SUBCONVEXITY_T)
    return SubconvexityReport(
        alpha=alpha,
        log_conductor=log_conductor,
        zero_count=count,
        conductor_term=(0.25 - alpha / SUBCONVEXITY_LOG_SHIFT)
        * log_conductor,
        zero_term=alpha / SUBCONVEXITY_COUNT_SCALE * count,
        l_term=2 * math.log(abs(l_value(chi, 1.5))),
        notes=["O(1) term omitted"],
    )
