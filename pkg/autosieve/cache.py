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

"""On-disk pickle cache of expensive results, such as zero scans."""

import pickle
import threading
import typing as T
from pathlib import Path

from autosieve.api.threading import synchronized
from autosieve.data import PROGRAM_CACHE_DIR

CACHE_SUFFIX = ".dat"
_LOCK = threading.RLock()


def get_cache_dir() -> Path:
    """Return path to cache files.

    :return: path to cache files
    """
    return PROGRAM_CACHE_DIR


def get_cache_file_path(cache_name: str) -> Path:
    """Translate cache file name into full path.

    :param cache_name: name of cache file
    :return: full cache file path
    """
    return get_cache_dir() / (cache_name + CACHE_SUFFIX)


def zero_scan_name(label: str, T: float, sigma_min: float) -> str:
    """Return the cache name of one zero scan.

    :param label: character label "q.index"
    :param T: box height
    :param sigma_min: left end of the box
    :return: cache file name without suffix
    """
    return f"zeros-{label}-T{T!r}-s{sigma_min!r}"


@synchronized(lock=_LOCK)
def load_cache(cache_name: str) -> T.Any:
    """Load cached object from disk.

    :param cache_name: name of cache file
    :return: persisted object, None when missing or truncated
    """
    cache_path = get_cache_file_path(cache_name)
    if cache_path.exists():
        with cache_path.open(mode="rb") as handle:
            try:
                return pickle.load(handle)
            except (EOFError, pickle.UnpicklingError):
                return None
    return None


@synchronized(lock=_LOCK)
def save_cache(cache_name: str, data: T.Any) -> None:
    """Save object to disk cache.

    :param cache_name: name of cache file
    :param data: object to persist
    """
    cache_path = get_cache_file_path(cache_name)
    cache_path.parent.mkdir(parents=True, exist_ok=True)
    with cache_path.open(mode="wb") as handle:
        pickle.dump(data, handle)


@synchronized(lock=_LOCK)
def wipe_cache() -> None:
    """Delete disk cache."""
    if not get_cache_dir().exists():
        return
    for path in get_cache_dir().iterdir():
        if path.suffix == CACHE_SUFFIX:
            path.unlink()
