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

"""Domain errors raised by the computational modules."""

import typing as T


class AutosieveError(ValueError):
    """Base class for all domain errors."""

    kind = "domain-error"


class InvalidRepresentation(AutosieveError):
    """Representation data violates one of its invariants."""

    kind = "invalid-representation"


class InvalidFamily(AutosieveError):
    """Family member exceeds the conductor cap."""

    kind = "invalid-family"


class MissingSplittingData(AutosieveError):
    """Field splitting table does not cover a needed rational prime."""

    kind = "missing-splitting-data"

    def __init__(self, prime: int) -> None:
        """Initialize self.

        :param prime: rational prime lacking splitting data
        """
        super().__init__(f"no splitting data for the prime {prime}")
        self.prime = prime


class MissingSatakeData(AutosieveError):
    """Representation has no Satake parameters at a needed prime."""

    kind = "missing-satake-data"


class RamifiedIdealError(AutosieveError):
    """An ideal shares a prime with a conductor."""

    kind = "ramified-ideal"


class NotSquarefreeError(AutosieveError):
    """An ideal required to be squarefree is not."""

    kind = "not-squarefree"


class NonPrimitiveCharacter(AutosieveError):
    """A primitive Dirichlet character was required."""

    kind = "non-primitive-character"


class UnsupportedRepresentation(AutosieveError):
    """The operation is only implemented for a narrower kind of data."""

    kind = "unsupported-representation"


class IndefiniteGramMatrix(AutosieveError):
    """The sieve Gram matrix is not positive semidefinite."""

    kind = "indefinite-gram-matrix"

    def __init__(self, min_eigenvalue: float) -> None:
        """Initialize self.

        :param min_eigenvalue: most negative eigenvalue found
        """
        super().__init__(
            f"sieve Gram matrix is indefinite "
            f"(smallest eigenvalue {min_eigenvalue:.3e})"
        )
        self.min_eigenvalue = min_eigenvalue


class NumericalError(AutosieveError):
    """A quantity that must be real or bounded came out wrong."""

    kind = "numerical-error"


class TuranHypothesisError(AutosieveError):
    """Power sum search was run with K below the number of terms."""

    kind = "turan-hypothesis"

    def __init__(self, count: int, K: int, found: T.Optional[int]) -> None:
        """Initialize self.

        :param count: number of terms in the power sum
        :param K: lower end of the searched exponent range
        :param found: exponent found anyway, if any
        """
        super().__init__(
            f"K={K} is smaller than the number of terms ({count}); "
            + (
                f"search still found k={found}"
                if found is not None
                else "search found nothing"
            )
        )
        self.count = count
        self.K = K
        self.found = found


class TuranSearchFailed(AutosieveError):
    """No exponent in [K, 2K] satisfied the power sum bound."""

    kind = "turan-search-failed"


class NoNearbyZeroError(AutosieveError):
    """No zero lies close enough to the line Re(s) = 1."""

    kind = "no-nearby-zero"


class PoleError(AutosieveError):
    """Evaluation at a pole."""

    kind = "pole"


class ContourError(AutosieveError):
    """Argument principle contour keeps hitting zeros."""

    kind = "contour"
