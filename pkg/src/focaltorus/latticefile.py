# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        latticefile
# Purpose:     Read and write lattice files
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


"""Lattice file format.

A lattice file is UTF-8 text. Lines starting with '#' are comments; the
first comment gives the name of the lattice. Blank lines are ignored. The
first other line reads `rank n`, followed by n lines of n rationals `p/q`
(or decimal literals) separated by blanks, the rows of the Gram matrix.

    >>> from focaltorus.catalog import catalog
    >>> text = dumps(catalog('A2'))
    >>> print(text, end='')
    # A2
    rank 2
    2 1
    1 2
    >>> loads(text).gram == catalog('A2').gram
    True
    >>> loads('rank 2\\n1 0\\n0 1/2 3\\n')  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    focaltorus.exceptions.LatticeFileError: ...
"""

from pathlib import Path
from typing import List, Optional, Union

from .exceptions import LatticeFileError
from .lattice import Lattice
from .quadspace import GramForm, QVectorT
from .utils import format_scalar, parse_scalar

# Public interface
__all__ = [
    'dumps',
    'loads',
    'read_lattice',
    'write_lattice',
    ]

PathT = Union[str, Path]

_RANK_KEYWORD = 'rank'


def loads(text: str, name: Optional[str] = None) -> Lattice:
    """Return the lattice described by `text`.

    Args:
        text: content of a lattice file
        name: label of the lattice; overrides the name comment

    Raises:
        LatticeFileError: `text` does not follow the format
        NotSymmetricError: Gram matrix is not symmetric
        NotPositiveDefiniteError: Gram matrix is not positive definite
    """
    comment_name: Optional[str] = None
    rank: Optional[int] = None
    rows: List[QVectorT] = []
    line_no = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith('#'):
            if comment_name is None:
                comment_name = stripped[1:].strip() or None
            continue
        if rank is None:
            rank = _parse_rank(stripped, line_no)
            continue
        if len(rows) == rank:
            raise LatticeFileError(f"More than {rank} matrix rows.", line_no)
        rows.append(_parse_row(stripped, rank, line_no))
    if rank is None:
        raise LatticeFileError("Missing 'rank' line.", line_no + 1)
    if len(rows) < rank:
        raise LatticeFileError(f"Expected {rank} matrix rows, got "
                               f"{len(rows)}.", line_no + 1)
    return Lattice(GramForm(rows), name if name is not None else comment_name)


def _parse_rank(line: str, line_no: int) -> int:
    fields = line.split()
    if len(fields) != 2 or fields[0] != _RANK_KEYWORD:
        raise LatticeFileError(f"Expected 'rank n', got '{line}'.", line_no)
    try:
        rank = int(fields[1])
    except ValueError:
        raise LatticeFileError(f"Invalid rank '{fields[1]}'.", line_no) \
            from None
    if rank < 1:
        raise LatticeFileError("Rank must be >= 1.", line_no)
    return rank


def _parse_row(line: str, rank: int, line_no: int) -> QVectorT:
    fields = line.split()
    if len(fields) != rank:
        raise LatticeFileError(f"Expected {rank} entries, got "
                               f"{len(fields)}.", line_no)
    try:
        return tuple(parse_scalar(field) for field in fields)
    except ValueError as exc:
        raise LatticeFileError(str(exc), line_no) from None


def dumps(lattice: Lattice) -> str:
    """Return the lattice file text describing `lattice`."""
    lines = []
    if lattice.name:
        lines.append(f"# {lattice.name}")
    lines.append(f"{_RANK_KEYWORD} {lattice.rank}")
    lines.extend(" ".join(format_scalar(x) for x in row)
                 for row in lattice.gram.entries)
    return "\n".join(lines) + "\n"


def read_lattice(path: PathT, name: Optional[str] = None) -> Lattice:
    """Read a lattice from the file at `path`.

    If the file has no name comment and `name` is not given, the file's
    stem is used as name.
    """
    path = Path(path)
    lattice = loads(path.read_text(encoding='utf-8'), name)
    if lattice.name is None:
        lattice = lattice.renamed(path.stem)
    return lattice


def write_lattice(lattice: Lattice, path: PathT) -> None:
    """Write `lattice` to the file at `path`."""
    Path(path).write_text(dumps(lattice), encoding='utf-8')
