# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        exceptions
# Purpose:     Provide focaltorus specific exceptions
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


"""Focaltorus specific exceptions."""

from typing import Any


class LatticeError(ValueError):
    """Base class of all errors raised by focaltorus."""


class DimensionMismatchError(LatticeError):
    """Raised when vectors or matrices of different dimensions are combined."""

    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        LatticeError.__init__(
            self, f"Dimension mismatch: expected {expected}, got {got}.")


class NotSymmetricError(LatticeError):
    """Raised when a Gram matrix is not symmetric."""

    def __init__(self, row: int, col: int):
        self.row = row
        self.col = col
        LatticeError.__init__(
            self, f"Matrix is not symmetric at ({row}, {col}).")


class NotPositiveDefiniteError(LatticeError):
    """Raised when a Gram matrix is not positive definite.

    The attribute `minor_index` holds the (1-based) size of the first leading
    principal minor which is not > 0.
    """

    def __init__(self, minor_index: int, minor: Any):
        self.minor_index = minor_index
        LatticeError.__init__(
            self, f"Matrix is not positive definite: leading principal "
            f"minor {minor_index} is {minor}.")


class ZeroVectorError(LatticeError):
    """Raised when a nonzero vector is required."""

    def __init__(self, what: str = "vector"):
        LatticeError.__init__(self, f"Given {what} must not be zero.")


class UnknownLatticeError(LatticeError):
    """Raised when a catalog name can not be resolved."""

    def __init__(self, name: str):
        self.name = name
        LatticeError.__init__(self, f"Unknown lattice: '{name}'.")


class LatticeFileError(LatticeError):
    """Raised when a lattice file can not be parsed."""

    def __init__(self, msg: str, line_no: int):
        self.line_no = line_no
        LatticeError.__init__(self, f"Line {line_no}: {msg}")


class BudgetExceededError(LatticeError):
    """Raised when a computation would exceed its resource budget."""

    def __init__(self, what: str, limit: Any):
        self.what = what
        self.limit = limit
        LatticeError.__init__(
            self, f"Budget exceeded: {what} (limit {limit}).")


class CutoffMismatchError(LatticeError):
    """Raised when spectra computed with different parameters are compared."""

    def __init__(self, msg: str, left: Any, right: Any):
        LatticeError.__init__(self, msg % (left, right))


class RankMismatchError(LatticeError):
    """Raised when lattices of different rank are compared."""

    def __init__(self, left: int, right: int):
        LatticeError.__init__(
            self, f"Can't compare a rank {left} and a rank {right} lattice.")


class RankTooLargeError(LatticeError):
    """Raised when the exact isometry decision is asked for a large rank."""

    def __init__(self, rank: int, limit: int):
        self.rank = rank
        self.limit = limit
        LatticeError.__init__(
            self, f"Rank {rank} exceeds the limit {limit} of the exact "
            "isometry decision; compare spectra and root graph components "
            "instead.")


class InconsistentCountError(LatticeError):
    """Raised when two independent counts of the same quantity disagree."""
