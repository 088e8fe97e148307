# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        catalog
# Purpose:     Named lattices
#
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


"""Catalog of named lattices.

Fixed names:

* A2: hexagonal root lattice
* E8: D8 plus the glue vector (1/2, …, 1/2)
* E8xE8: orthogonal sum of two copies of E8
* D16plus: D16 plus the glue vector (1/2, …, 1/2)

Name patterns:

* Z<n>: the integer lattice ℤⁿ
* A<n>: root lattice A_n
* D<n>: checkerboard lattice {x ∈ ℤⁿ | Σx_i even} (n ≥ 2)

E8xE8 and D16plus are the even unimodular lattices of rank 16; their tori
have equal length spectra but are not isometric.

    >>> catalog('A2').gram
    GramForm([[2, 1], [1, 2]])
    >>> catalog('D16plus').rank
    16
    >>> catalog('E8').det
    Fraction(1, 1)
"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .exceptions import UnknownLatticeError
from .lattice import Lattice
from .quadspace import GramForm, QMatrixT, mat_mul, transpose

# Public interface
__all__ = [
    'catalog',
    'catalog_names',
    ]

_HALF = Fraction(1, 2)

_PATTERN = re.compile(r'^(?P<family>[ZAD])(?P<rank>[1-9][0-9]*)$')

#: Builders of the fixed names
_REGISTRY: Dict[str, Callable[[], Lattice]] = {}


def _register(name: str) -> Callable[[Callable[[], Lattice]],
                                      Callable[[], Lattice]]:
    def register(builder: Callable[[], Lattice]) -> Callable[[], Lattice]:
        assert name not in _REGISTRY, f"'{name}' registered twice"
        _REGISTRY[name] = builder
        return builder
    return register


def _from_rows(name: str, rows: Sequence[Sequence[Fraction]]) -> Lattice:
    """Lattice generated by `rows` (coordinates in an orthonormal frame)."""
    gram = GramForm(mat_mul(rows, transpose(rows)))
    return Lattice(gram, name,
                   embedding=[[float(x) for x in row] for row in rows])


def _unit(n: int, i: int, factor: int = 1) -> List[Fraction]:
    row = [Fraction(0)] * n
    row[i] = Fraction(factor)
    return row


def _glued_rows(n: int) -> QMatrixT:
    """2e₁, e₂ − e₁, …, e_{n−1} − e_{n−2}, (1/2, …, 1/2)."""
    rows = [_unit(n, 0, 2)]
    for i in range(1, n - 1):
        row = _unit(n, i)
        row[i - 1] = Fraction(-1)
        rows.append(row)
    rows.append([_HALF] * n)
    return tuple(tuple(row) for row in rows)


def _integer_lattice(n: int) -> Lattice:
    return _from_rows(f"Z{n}", [_unit(n, i) for i in range(n)])


def _root_lattice_a(n: int) -> Lattice:
    entries = [[2 if i == j else 1 if abs(i - j) == 1 else 0
                for j in range(n)] for i in range(n)]
    return Lattice(GramForm(entries), f"A{n}")


def _root_lattice_d(n: int) -> Lattice:
    rows = []
    for i in range(n - 1):
        row = _unit(n, i)
        row[i + 1] = Fraction(-1)
        rows.append(row)
    row = _unit(n, n - 2)
    row[n - 1] = Fraction(1)
    rows.append(row)
    return _from_rows(f"D{n}", rows)


@_register('A2')
def _a2() -> Lattice:
    return _root_lattice_a(2)


@_register('E8')
def _e8() -> Lattice:
    return _from_rows('E8', _glued_rows(8))


@_register('D16plus')
def _d16plus() -> Lattice:
    return _from_rows('D16plus', _glued_rows(16))


@_register('E8xE8')
def _e8xe8() -> Lattice:
    rows = _glued_rows(8)
    zeros = (Fraction(0),) * 8
    return _from_rows('E8xE8',
                      [row + zeros for row in rows]
                      + [zeros + row for row in rows])


def _parse_pattern(name: str) -> Optional[Tuple[str, int]]:
    match = _PATTERN.match(name)
    if match is None:
        return None
    return match['family'], int(match['rank'])


@lru_cache(maxsize=None)
def catalog(name: str) -> Lattice:
    """Return the lattice named `name`.

    Raises:
        UnknownLatticeError: `name` is neither a fixed name nor matches one
            of the name patterns
    """
    try:
        builder = _REGISTRY[name]
    except KeyError:
        pass
    else:
        return builder()
    parsed = _parse_pattern(name)
    if parsed is None:
        raise UnknownLatticeError(name)
    family, n = parsed
    if family == 'Z':
        return _integer_lattice(n)
    if family == 'A':
        return _root_lattice_a(n)
    if n < 2:
        raise UnknownLatticeError(name)
    return _root_lattice_d(n)


def catalog_names() -> Tuple[str, ...]:
    """Return the fixed names of the catalog."""
    return tuple(sorted(_REGISTRY))
