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

"""Zero scan API.

Wraps the contour scanner with the configured parameters and the on-disk
cache.
"""

import typing as T

from autosieve.api.log import LogApi
from autosieve.api.threading import ThreadingApi
from autosieve.cache import load_cache, save_cache, zero_scan_name
from autosieve.cfg import Config
from autosieve.core.characters import DirichletCharacter
from autosieve.zero_lab.zeros import ZeroList, scan_zeros


class ZerosApi:
    """The zero scan API."""

    def __init__(
        self,
        cfg: Config,
        log_api: LogApi,
        threading_api: ThreadingApi,
        use_cache: bool = True,
    ) -> None:
        """Initialize self.

        :param cfg: program configuration
        :param log_api: logging API
        :param threading_api: threading API
        :param use_cache: whether scans may be read from and saved to disk
        """
        self._cfg = cfg
        self._log_api = log_api
        self._threading_api = threading_api
        self.use_cache = use_cache

    @property
    def _cache_enabled(self) -> bool:
        return self.use_cache and bool(self._cfg.opt["cache"]["zeros"])

    def scan(
        self,
        chi: DirichletCharacter,
        T: float,
        sigma_min: float = 0.0,
        parallel: bool = True,
    ) -> ZeroList:
        """Return the zeros of L(s, chi) in the box, scanning if needed.

        :param chi: primitive Dirichlet character
        :param T: box height
        :param sigma_min: left end of the box
        :param parallel: whether strips go to the worker pool
        :return: zero list
        """
        name = zero_scan_name(chi.label, T, sigma_min)
        if self._cache_enabled:
            cached = load_cache(name)
            if isinstance(cached, ZeroList):
                self._log_api.debug(f"zeros of {chi}: cache hit")
                return cached

        opt = self._cfg.opt["zeros"]
        self._log_api.debug(f"zeros of {chi}: scanning up to {T}")
        zeros = scan_zeros(
            chi,
            T,
            sigma_min,
            mapper=self._threading_api.map if parallel else map,
            grid_step=float(opt["grid_step"]),
            max_perturbations=int(opt["max_perturbations"]),
            perturbation=float(opt["perturbation"]),
            tolerance=float(opt["refine_tolerance"]),
        )
        if self._cache_enabled:
            save_cache(name, zeros)
        return zeros

    def scanner(self) -> T.Callable[[DirichletCharacter, float], ZeroList]:
        """Return a scan function for use inside pool workers.

        :return: function of a character and a height
        """
        return lambda chi, height: self.scan(chi, height, parallel=False)
