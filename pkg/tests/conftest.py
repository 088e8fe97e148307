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


"""Shared pytest fixtures."""

from typing import Any

import pytest

from focaltorus import Lattice, catalog, make_lattice


def pytest_configure(config: Any) -> None:
    config.addinivalue_line(
        "markers", "slow: large enumerations (minutes, not seconds)")


@pytest.fixture(scope="session")
def square() -> Lattice:
    return catalog('Z2')


@pytest.fixture(scope="session")
def hexagonal() -> Lattice:
    return catalog('A2')


@pytest.fixture(scope="session")
def skewed_square() -> Lattice:
    # basis (1, 0), (100, 1) of Z²
    return make_lattice([[1, 100], [100, 10001]], name='Z2skew')


@pytest.fixture(scope="session")
def e8() -> Lattice:
    return catalog('E8')
