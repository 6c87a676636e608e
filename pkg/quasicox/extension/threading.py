# -*- coding: utf-8 -*-
# +---------------------------------------------------------------------------+
# |  Copyright (c) 2026 Quasicox Developers                                   |
# |                                                                           |
# |  This file is part of Quasicox.                                           |
# |                                                                           |
# |  Quasicox is free software: you can redistribute it and/or modify         |
# |  it under the terms of the GNU General Public License as published by     |
# |  the Free Software Foundation, either version 3 of the License, or        |
# |  (at your option) any later version.                                      |
# |                                                                           |
# |  Quasicox is distributed in the hope that it will be useful,              |
# |  but WITHOUT ANY WARRANTY; without even the implied warranty of           |
# |  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the            |
# |  GNU General Public License for more details.                             |
# |                                                                           |
# |  You should have received a copy of the GNU General Public License        |
# |  along with Quasicox.  If not, see <https://www.gnu.org/licenses/>.       |
# +---------------------------------------------------------------------------+

from concurrent.futures import Future, ThreadPoolExecutor
from functools import wraps
from threading import Lock
from typing import Callable, Generic, Iterable, List, TypeVar

T = TypeVar('T')


class Task(Generic[T]):
    """
    Unit of work run on the shared pool, or inline when the pool has one worker.
    """

    _pool: ThreadPoolExecutor = None
    _pool_size: int = 1
    _pool_lock = Lock()

    def __init__(self, fn: Callable[..., T], *args, **kwargs):
        self.fn = fn
        self.args = args
        self.kwargs = kwargs
        self.result = None
        self.error = None
        self._future: Future = None
        self._isTerminated = False

    def run(self):
        try:
            self.result = self.fn(*self.args, **self.kwargs)
        except BaseException as ex:
            self.error = ex
        finally:
            self._isTerminated = True
        return self

    def get(self) -> T:
        """
        Wait until completion and return result
        """
        if self._future is not None:
            self._future.result()
        elif not self._isTerminated:
            self.run()
        if self.error:
            raise self.error
        return self.result

    def __call__(self) -> T:
        return self.get()

    @classmethod
    def configure(cls, workers: int):
        with cls._pool_lock:
            workers = max(1, int(workers))
            if workers != cls._pool_size and cls._pool is not None:
                cls._pool.shutdown(wait=True)
                cls._pool = None
            cls._pool_size = workers

    @classmethod
    def pool(cls) -> ThreadPoolExecutor:
        with cls._pool_lock:
            if cls._pool is None and cls._pool_size > 1:
                cls._pool = ThreadPoolExecutor(max_workers=cls._pool_size,
                                               thread_name_prefix='quasicox')
            return cls._pool

    @staticmethod
    def execute(fn, *args, **kwargs) -> 'Task[T]':
        t = Task(fn, *args, **kwargs)
        pool = Task.pool()
        if pool is None:
            t.run()
        else:
            t._future = pool.submit(t.run)
        return t

    @staticmethod
    def join(jobs: Iterable['Task[T]']) -> List[T]:
        """
        Wait for all jobs to complete, results in submission order.
        Throws: First exception encountered after all jobs are completed.
        """
        jobs = list(jobs)
        for j in jobs:
            if j._future is not None:
                j._future.result()
        return [j.get() for j in jobs]


def task(fn):
    """
    Decorator. Converts a normal function into a Task builder.
    """
    @wraps(fn)
    def wrapper(*args, **kwargs):
        return Task.execute(fn, *args, **kwargs)
    return wrapper
