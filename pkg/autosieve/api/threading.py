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

"""Threading API."""

import concurrent.futures
import functools
import threading
import typing as T

from autosieve.api.log import LogApi


def synchronized(wrapped: T.Any = None, lock: T.Any = None) -> T.Any:
    """A decorator that lets the passed function run only when given lock is
    active. If there is no lock passed, the function uses its own internal
    lock.

    :param wrapped: function to decorate
    :param lock: lock to use
    :return: decorated function
    """
    if wrapped is None:
        return functools.partial(synchronized, lock=lock)

    if lock is None:
        lock = threading.RLock()

    @functools.wraps(wrapped)
    def _wrapper(*args: T.Any, **kwargs: T.Any) -> T.Any:
        assert lock
        assert wrapped
        with lock:
            return wrapped(*args, **kwargs)

    return _wrapper


class ThreadingApi:
    """The threading API.

    Work items run on a pool of worker threads; results always come back
    in input order so reductions do not depend on scheduling.
    """

    def __init__(self, log_api: LogApi, max_workers: int = 1) -> None:
        """Initialize self.

        :param log_api: logging API
        :param max_workers: size of the worker pool
        """
        if max_workers < 1:
            raise ValueError(f"need at least one worker, got {max_workers}")
        self._log_api = log_api
        self.max_workers = max_workers
        self._executor: T.Optional[concurrent.futures.ThreadPoolExecutor] = (
            None
        )

    @synchronized
    def _get_executor(self) -> concurrent.futures.ThreadPoolExecutor:
        if self._executor is None:
            self._log_api.debug(f"starting {self.max_workers} workers")
            self._executor = concurrent.futures.ThreadPoolExecutor(
                max_workers=self.max_workers,
                thread_name_prefix="autosieve",
            )
        return self._executor

    def map(
        self, func: T.Callable[[T.Any], T.Any], items: T.Iterable[T.Any]
    ) -> T.List[T.Any]:
        """Apply func to every item on the worker pool.

        :param func: function of one argument
        :param items: arguments
        :return: results in input order
        """
        items = list(items)
        if self.max_workers == 1 or len(items) <= 1:
            return [func(item) for item in items]
        return list(self._get_executor().map(func, items))

    def shutdown(self) -> None:
        """Stop the worker pool."""
        if self._executor is not None:
            self._executor.shutdown(wait=True)
            self._executor = None
