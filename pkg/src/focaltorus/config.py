# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Author:      focaltorus developers
#
# Copyright:   (c) 2026 ff. focaltorus developers
# License:     This program is free software. You can redistribute it, use it
#              and/or modify it under the terms of the 2-clause BSD license.
#              For license details please read the file LICENCE.txt provided
#              together with the source code.
# ----------------------------------------------------------------------------
# $Source$
# $Revision$


"""Resource budgets and run configuration."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Optional

from .exceptions import BudgetExceededError

#: Environment variable consulted when no thread count is given.
THREADS_ENV_VAR = "FOCAL_THREADS"

DFLT_MAX_POINTS = 10_000_000
DFLT_TIME_LIMIT = 300.0

OUTPUT_FORMATS = ('text', 'json', 'csv', 'svg')


@dataclass(frozen=True)
class Budget:
    """Resource budget of a computation.

    Args:
        max_points: maximum number of work items (enumerated lattice points,
            examined plane subsets, …)
        time_limit: soft cap on wall-clock seconds

    Exceeding the budget raises :class:`BudgetExceededError`; results are
    never silently truncated.
    """

    max_points: int = DFLT_MAX_POINTS
    time_limit: float = DFLT_TIME_LIMIT

    def __post_init__(self) -> None:
        if self.max_points <= 0:
            raise ValueError("'max_points' must be > 0.")
        if self.time_limit <= 0:
            raise ValueError("'time_limit' must be > 0.")

    def start(self) -> BudgetTracker:
        """Return a fresh tracker for this budget."""
        return BudgetTracker(self)


class BudgetTracker:
    """Counts work items against a :class:`Budget`."""

    __slots__ = ['_budget', '_count', '_started', '_next_clock_check']

    # wall clock is only consulted every so many items
    _CLOCK_INTERVAL = 4096

    def __init__(self, budget: Budget):
        self._budget = budget
        self._count = 0
        self._started = time.monotonic()
        self._next_clock_check = self._CLOCK_INTERVAL

    @property
    def count(self) -> int:
        """Number of work items charged so far."""
        return self._count

    @property
    def elapsed(self) -> float:
        """Seconds since the tracker was started."""
        return time.monotonic() - self._started

    def charge(self, n_items: int = 1, what: str = "work items") -> None:
        """Charge `n_items` to the budget.

        Raises:
            BudgetExceededError: item count or time limit exceeded
        """
        self._count += n_items
        budget = self._budget
        if self._count > budget.max_points:
            raise BudgetExceededError(what, budget.max_points)
        if self._count >= self._next_clock_check:
            self._next_clock_check = self._count + self._CLOCK_INTERVAL
            self.check_clock()

    def check_clock(self) -> None:
        """Raise BudgetExceededError if the time limit has passed."""
        if self.elapsed > self._budget.time_limit:
            raise BudgetExceededError("wall-clock seconds",
                                      self._budget.time_limit)


def default_threads(threads: Optional[int] = None) -> int:
    """Return the number of worker processes to use.

    Precedence: explicit `threads`, then the environment variable
    FOCAL_THREADS, then the number of available cores.
    """
    if threads is None:
        env = os.environ.get(THREADS_ENV_VAR)
        if env:
            try:
                threads = int(env)
            except ValueError:
                raise ValueError(f"{THREADS_ENV_VAR} must be an integer, "
                                 f"got '{env}'.") from None
        else:
            threads = os.cpu_count() or 1
    if threads < 1:
        raise ValueError("Number of threads must be >= 1.")
    return threads


@dataclass(frozen=True)
class RunConfig:
    """Configuration of one CLI run."""

    command: str
    output_format: str = 'text'
    threads: int = 1
    budget: Budget = field(default_factory=Budget)
    verbosity: int = 0

    def __post_init__(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format '{self.output_format}'.")
        if self.threads < 1:
            raise ValueError("Number of threads must be >= 1.")
