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


"""Test driver for module config"""

import time

import pytest

from focaltorus import Budget, BudgetExceededError, RunConfig
from focaltorus.config import (
    DFLT_MAX_POINTS, DFLT_TIME_LIMIT, THREADS_ENV_VAR, default_threads,
    )


def test_budget_defaults() -> None:
    budget = Budget()
    assert budget.max_points == DFLT_MAX_POINTS
    assert budget.time_limit == DFLT_TIME_LIMIT


@pytest.mark.parametrize(("max_points", "time_limit"),
                         [(0, 1.0), (-5, 1.0), (10, 0.0), (10, -1.0)],
                         ids=("zero-points", "negative-points", "zero-time",
                              "negative-time"))
def test_budget_invalid(max_points: int, time_limit: float) -> None:
    with pytest.raises(ValueError):
        Budget(max_points, time_limit)


def test_tracker_counts() -> None:
    tracker = Budget(max_points=10).start()
    tracker.charge()
    tracker.charge(9, "points")
    assert tracker.count == 10
    with pytest.raises(BudgetExceededError) as info:
        tracker.charge(1, "points")
    assert info.value.what == "points"
    assert info.value.limit == 10


def test_trackers_are_independent() -> None:
    budget = Budget(max_points=5)
    first = budget.start()
    first.charge(5)
    second = budget.start()
    second.charge(5)
    assert (first.count, second.count) == (5, 5)


def test_time_limit(monkeypatch: pytest.MonkeyPatch) -> None:
    tracker = Budget(time_limit=1.0).start()
    tracker.check_clock()
    now = time.monotonic()
    monkeypatch.setattr(time, 'monotonic', lambda: now + 5.0)
    assert tracker.elapsed >= 5.0
    with pytest.raises(BudgetExceededError) as info:
        tracker.check_clock()
    assert info.value.what == "wall-clock seconds"


def test_default_threads(monkeypatch: pytest.MonkeyPatch) -> None:
    assert default_threads(3) == 3
    monkeypatch.setenv(THREADS_ENV_VAR, "5")
    assert default_threads() == 5
    assert default_threads(2) == 2
    monkeypatch.setenv(THREADS_ENV_VAR, "many")
    with pytest.raises(ValueError):
        default_threads()
    monkeypatch.delenv(THREADS_ENV_VAR)
    assert default_threads() >= 1
    with pytest.raises(ValueError):
        default_threads(0)


def test_run_config() -> None:
    config = RunConfig('spectra', output_format='csv', threads=2)
    assert config.budget == Budget()
    assert config.verbosity == 0
    with pytest.raises(ValueError):
        RunConfig('spectra', output_format='xml')
    with pytest.raises(ValueError):
        RunConfig('spectra', threads=0)
