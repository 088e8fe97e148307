# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        quadspace
# Purpose:     Exact linear algebra over a positive definite quadratic form
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


r"""Exact linear algebra over a positive definite quadratic form.

All geometry in focaltorus is expressed in coordinates relative to a lattice
basis. The metric is given by a Gram matrix `G` with rational entries, the
inner product of two vectors is :math:`u^T G v`.

Vectors are plain tuples of :class:`fractions.Fraction`:

    >>> G = GramForm([[2, 1], [1, 2]])
    >>> u, v = qvector((1, 0)), qvector((0, 1))
    >>> inner(u, v, G)
    Fraction(1, 1)
    >>> dist2(u, v, G)
    Fraction(2, 1)

A Gram matrix must be symmetric and positive definite:

    >>> GramForm([[1, 2], [2, 1]])  # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    focaltorus.exceptions.NotPositiveDefiniteError: ...

Intersections of hyperplanes are affine flats, and the point of a flat
closest to the origin is its foot:

    >>> class Plane:
    ...     def __init__(self, normal, offset):
    ...         self.normal, self.offset = qvector(normal), Fraction(offset)
    >>> Z2 = GramForm([[1, 0], [0, 1]])
    >>> flat = flat_intersection([Plane((2, 0), 1)], Z2)
    >>> flat.codim
    1
    >>> foot_of_origin(flat, G)
    ((Fraction(1, 2), Fraction(-1, 4)), Fraction(3, 8))
"""

from __future__ import annotations

from fractions import Fraction
from typing import (
    Any, Iterable, List, Optional, Protocol, Sequence, Tuple,
    )

from .exceptions import (
    DimensionMismatchError, NotPositiveDefiniteError, NotSymmetricError,
    )
from .utils import ScalarLikeT, as_scalar, lcm

# Public interface
__all__ = [
    'AffineFlat',
    'GramForm',
    'Hyperplane',
    'dist2',
    'flat_intersection',
    'foot_of_origin',
    'inner',
    'ldl',
    'norm2',
    'qvector',
    'rank',
    'solve',
    ]

#: Vector of exact scalars in basis coordinates
QVectorT = Tuple[Fraction, ...]
#: Integer vector
IntVectorT = Tuple[int, ...]
#: Matrix of exact scalars (tuple of rows)
QMatrixT = Tuple[QVectorT, ...]
#: Integer matrix (tuple of rows)
IntMatrixT = Tuple[IntVectorT, ...]
#: Anything usable as a vector
VectorLikeT = Iterable[ScalarLikeT]
#: Result of solving a linear system: particular solution and kernel basis
SolutionT = Tuple[QVectorT, Tuple[QVectorT, ...]]


class Hyperplane(Protocol):
    """Affine hyperplane given by the equation normal · x = offset."""

    @property
    def normal(self) -> QVectorT:
        """Coefficients of the linear equation."""

    @property
    def offset(self) -> Fraction:
        """Right hand side of the linear equation."""


def qvector(coords: VectorLikeT) -> QVectorT:
    """Return `coords` as tuple of Fractions."""
    return tuple(as_scalar(c) for c in coords)


# fraction-free elimination

def _integral_rows(rows: Iterable[Sequence[Fraction]]) -> List[List[int]]:
    """Scale every row by the lcm of its denominators."""
    res = []
    for row in rows:
        den = lcm(*(x.denominator for x in row))
        res.append([int(x * den) for x in row])
    return res


def _bareiss(rows: List[List[int]], n_cols: Optional[int] = None) \
        -> Tuple[List[List[int]], List[int]]:
    """Bring integer matrix `rows` to echelon form (in place).

    Fraction-free Gaussian elimination: every intermediate entry is a minor
    of the input, so all divisions are exact.

    Only the first `n_cols` columns (default: all) are used as pivot columns.

    Returns:
        the echelon rows and the list of pivot columns
    """
    n_rows = len(rows)
    if n_rows == 0:
        return rows, []
    width = len(rows[0])
    if n_cols is None:
        n_cols = width
    pivots: List[int] = []
    prev = 1
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pivot_row = rows[r]
        piv = pivot_row[c]
        for i in range(r + 1, n_rows):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, width):
                row[j] = (piv * row[j] - f * pivot_row[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def rank(rows: Iterable[VectorLikeT]) -> int:
    """Return the rank of the matrix given by `rows`."""
    int_rows = _integral_rows(qvector(row) for row in rows)
    _, pivots = _bareiss(int_rows)
    return len(pivots)


def determinant(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Return the determinant of the square `matrix`."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    den = lcm(*(x.denominator for row in matrix for x in row))
    rows = [[int(x * den) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n):
        p = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        piv = rows[k][k]
        for i in range(k + 1, n):
            row = rows[i]
            f = row[k]
            for j in range(k + 1, n):
                row[j] = (piv * row[j] - f * rows[k][j]) // prev
            row[k] = 0
        prev = piv
    return Fraction(sign * rows[n - 1][n - 1], den ** n)


def _back_substitute(echelon: List[List[int]], pivots: List[int],
                     n_cols: int, rhs_col: Optional[int],
                     fixed: Sequence[Tuple[int, Fraction]] = ()) -> QVectorT:
    x = [Fraction(0)] * n_cols
    for col, val in fixed:
        x[col] = val
    for r in reversed(range(len(pivots))):
        row = echelon[r]
        p = pivots[r]
        acc = Fraction(row[rhs_col]) if rhs_col is not None else Fraction(0)
        for j in range(p + 1, n_cols):
            if row[j]:
                acc -= row[j] * x[j]
        x[p] = acc / row[p]
    return tuple(x)


def solve(matrix: Sequence[VectorLikeT], rhs: VectorLikeT) \
        -> Optional[SolutionT]:
    """Solve the linear system `matrix` · x = `rhs` exactly.

    Returns:
        None if the system is inconsistent, otherwise a particular solution
        and a basis of the kernel of `matrix`
    """
    rows = [qvector(row) for row in matrix]
    b = qvector(rhs)
    if len(rows) != len(b):
        raise DimensionMismatchError(len(rows), len(b))
    if not rows:
        raise ValueError("Can't solve an empty system.")
    n_cols = len(rows[0])
    for row in rows:
        if len(row) != n_cols:
            raise DimensionMismatchError(n_cols, len(row))
    aug = _integral_rows(row + (bi,) for row, bi in zip(rows, b))
    echelon, pivots = _bareiss(aug, n_cols=n_cols)
    # inconsistent iff some row is zero left of the bar but not right of it
    for row in echelon[len(pivots):]:
        if row[n_cols] != 0:
            return None
    particular = _back_substitute(echelon, pivots, n_cols, n_cols)
    free = [c for c in range(n_cols) if c not in pivots]
    kernel = tuple(_back_substitute(echelon, pivots, n_cols, None,
                                    ((f, Fraction(1)),))
                   for f in free)
    return particular, kernel


def rref(rows: Iterable[VectorLikeT]) -> QMatrixT:
    """Return the nonzero rows of the reduced row echelon form of `rows`."""
    int_rows = _integral_rows(qvector(row) for row in rows)
    echelon, pivots = _bareiss(int_rows)
    res = [[Fraction(x, row[p]) for x in row]
           for row, p in zip(echelon, pivots)]
    for r in reversed(range(len(pivots))):
        p = pivots[r]
        for i in range(r):
            f = res[i][p]
            if f:
                res[i] = [a - f * b for a, b in zip(res[i], res[r])]
    return tuple(tuple(row) for row in res)


# matrix helpers

def transpose(matrix: Sequence[Sequence[Any]]) -> Tuple[Tuple[Any, ...], ...]:
    """Return the transpose of `matrix`."""
    return tuple(zip(*matrix))


def mat_mul(a: Sequence[Sequence[Any]], b: Sequence[Sequence[Any]]) \
        -> Tuple[Tuple[Any, ...], ...]:
    """Return the matrix product `a` · `b`."""
    cols = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols)
                 for row in a)


def mat_vec(a: Sequence[Sequence[Any]], v: Sequence[Any]) -> Tuple[Any, ...]:
    """Return the product of matrix `a` and column vector `v`."""
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def identity(n: int) -> IntMatrixT:
    """Return the n×n identity matrix."""
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def inverse(matrix: Sequence[Sequence[Any]]) -> QMatrixT:
    """Return the inverse of the square `matrix`.

    Raises:
        ValueError: `matrix` is singular
    """
    n = len(matrix)
    cols = []
    for j in range(n):
        sol = solve(matrix, [int(i == j) for i in range(n)])
        if sol is None or sol[1]:
            raise ValueError("Matrix is singular.")
        cols.append(sol[0])
    return transpose(cols)


def int_inverse(matrix: Sequence[Sequence[int]]) -> IntMatrixT:
    """Return the inverse of the unimodular integer `matrix`.

    Raises:
        ValueError: `matrix` is not unimodular
    """
    inv = inverse(matrix)
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("Matrix is not unimodular.")
    return tuple(tuple(int(x) for x in row) for row in inv)


class GramForm:
    """Positive definite symmetric matrix of exact rationals.

    Args:
        entries: rows of the matrix; entries can be anything accepted by
            :func:`focaltorus.utils.as_scalar`

    Raises:
        DimensionMismatchError: matrix is not square
        NotSymmetricError: matrix is not symmetric
        NotPositiveDefiniteError: some leading principal minor is not > 0

    Instances are immutable.
    """

    __slots__ = ['_entries', '_hash', '_integral']

    _entries: QMatrixT
    _integral: Optional[Tuple[IntMatrixT, int]]

    def __init__(self, entries: Iterable[VectorLikeT]):
        rows = tuple(qvector(row) for row in entries)
        n = len(rows)
        if n == 0:
            raise ValueError("Gram matrix must not be empty.")
        for row in rows:
            if len(row) != n:
                raise DimensionMismatchError(n, len(row))
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise NotSymmetricError(i, j)
        self._entries = rows
        self._hash = hash(rows)
        self._integral = None
        self._check_positive_definite()

    def _check_positive_definite(self) -> None:
        # Without row exchanges the k-th Bareiss pivot is the k-th leading
        # principal minor (times den ** k).
        int_rows, den = self.integral()
        rows = [list(row) for row in int_rows]
        n = len(rows)
        prev = 1
        for k in range(n):
            piv = rows[k][k]
            if piv <= 0:
                raise NotPositiveDefiniteError(k + 1,
                                               Fraction(piv, den ** (k + 1)))
            for i in range(k + 1, n):
                row = rows[i]
                f = row[k]
                for j in range(k + 1, n):
                    row[j] = (piv * row[j] - f * rows[k][j]) // prev
                row[k] = 0
            prev = piv

    @property
    def rank(self) -> int:
        """Dimension of the space the form lives on."""
        return len(self._entries)

    @property
    def entries(self) -> QMatrixT:
        """Rows of the matrix."""
        return self._entries

    def __getitem__(self, idx: int) -> QVectorT:
        """Return row `idx`."""
        return self._entries[idx]

    def __iter__(self) -> Any:
        """Return iterator over the rows."""
        return iter(self._entries)

    def __len__(self) -> int:
        """Return the number of rows."""
        return len(self._entries)

    @property
    def det(self) -> Fraction:
        """Determinant of the matrix."""
        return determinant(self._entries)

    def integral(self) -> Tuple[IntMatrixT, int]:
        """Return integer matrix M and denominator g with M / g == self."""
        if self._integral is None:
            den = lcm(*(x.denominator for row in self._entries for x in row))
            int_rows = tuple(tuple(int(x * den) for x in row)
                             for row in self._entries)
            self._integral = (int_rows, den)
        return self._integral

    def is_integral(self) -> bool:
        """Return True if all entries are integers."""
        return self.integral()[1] == 1

    def scaled(self, factor: ScalarLikeT) -> GramForm:
        """Return `factor` · self (`factor` must be > 0)."""
        c = as_scalar(factor)
        if c <= 0:
            raise ValueError("Scale factor must be > 0.")
        return GramForm(tuple(c * x for x in row) for row in self._entries)

    def transformed(self, u: Sequence[Sequence[int]]) -> GramForm:
        """Return Uᵀ · self · U, the form in the basis given by U's columns."""
        if len(u) != self.rank:
            raise DimensionMismatchError(self.rank, len(u))
        return GramForm(mat_mul(mat_mul(transpose(u), self._entries), u))

    def as_floats(self) -> List[List[float]]:
        """Return the entries as floats (render path only)."""
        return [[float(x) for x in row] for row in self._entries]

    def __eq__(self, other: Any) -> bool:
        """self == other"""
        if isinstance(other, GramForm):
            return self._entries == other._entries
        return NotImplemented

    def __hash__(self) -> int:
        """hash(self)"""
        return self._hash

    def __repr__(self) -> str:
        """repr(self)"""
        rows = ", ".join("[" + ", ".join(str(x) for x in row) + "]"
                         for row in self._entries)
        return f"GramForm([{rows}])"

    # pickle support for __slots__ without __dict__
    def __reduce__(self) -> Any:
        return (GramForm, (self._entries,))


def _check_dims(u: Sequence[Any], v: Sequence[Any], gram: GramForm) -> None:
    n = gram.rank
    if len(u) != n:
        raise DimensionMismatchError(n, len(u))
    if len(v) != n:
        raise DimensionMismatchError(n, len(v))


def inner(u: Sequence[Any], v: Sequence[Any], gram: GramForm) -> Fraction:
    """Return uᵀ · G · v."""
    _check_dims(u, v, gram)
    return Fraction(sum(ui * sum(g * vj for g, vj in zip(row, v))
                        for ui, row in zip(u, gram.entries)
                        if ui))


def norm2(u: Sequence[Any], gram: GramForm) -> Fraction:
    """Return uᵀ · G · u."""
    return inner(u, u, gram)


def dist2(u: Sequence[Any], v: Sequence[Any], gram: GramForm) -> Fraction:
    """Return the squared distance between `u` and `v`."""
    _check_dims(u, v, gram)
    d = [a - b for a, b in zip(u, v)]
    return inner(d, d, gram)


def ldl(gram: GramForm) -> Tuple[QMatrixT, QVectorT]:
    """Return the exact LDLᵀ decomposition of `gram`.

    Returns:
        unit lower triangular L and diagonal D (as vector) with
        G = L · diag(D) · Lᵀ
    """
    n = gram.rank
    g = gram.entries
    low = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    diag = [Fraction(0)] * n
    for j in range(n):
        diag[j] = g[j][j] - sum((low[j][k] ** 2 * diag[k] for k in range(j)),
                                Fraction(0))
        for i in range(j + 1, n):
            low[i][j] = (g[i][j] - sum((low[i][k] * low[j][k] * diag[k]
                                        for k in range(j)),
                                       Fraction(0))) / diag[j]
    return tuple(tuple(row) for row in low), tuple(diag)


class AffineFlat:
    """Affine subspace given by a base point and a basis of directions.

    Args:
        base: a point of the flat
        directions: linearly independent direction vectors
        ambient_rank: dimension of the surrounding space (defaults to the
            length of `base`)

    Two flats compare equal iff they are the same point set.
    """

    __slots__ = ['_base', '_directions', '_ambient_rank', '_key']

    _key: Optional[Tuple[QVectorT, QMatrixT]]

    def __init__(self, base: VectorLikeT,
                 directions: Iterable[VectorLikeT] = (),
                 ambient_rank: Optional[int] = None):
        self._base = qvector(base)
        n = len(self._base) if ambient_rank is None else ambient_rank
        if len(self._base) != n:
            raise DimensionMismatchError(n, len(self._base))
        dirs = tuple(qvector(d) for d in directions)
        for d in dirs:
            if len(d) != n:
                raise DimensionMismatchError(n, len(d))
        if dirs and rank(dirs) != len(dirs):
            raise ValueError("Direction vectors must be linearly "
                             "independent.")
        self._directions = dirs
        self._ambient_rank = n
        self._key = None

    @property
    def base(self) -> QVectorT:
        """A point of the flat."""
        return self._base

    @property
    def directions(self) -> Tuple[QVectorT, ...]:
        """Basis of the direction subspace."""
        return self._directions

    @property
    def ambient_rank(self) -> int:
        """Dimension of the surrounding space."""
        return self._ambient_rank

    @property
    def dim(self) -> int:
        """Dimension of the flat."""
        return len(self._directions)

    @property
    def codim(self) -> int:
        """Codimension of the flat."""
        return self._ambient_rank - len(self._directions)

    @property
    def canonical_key(self) -> Tuple[QVectorT, QMatrixT]:
        """Key identifying the flat as point set.

        The key is the reduced row echelon form of the directions together
        with the unique point of the flat whose pivot coordinates are 0.
        """
        if self._key is None:
            echelon = rref(self._directions) if self._directions else ()
            point = list(self._base)
            for row in echelon:
                p = next(i for i, x in enumerate(row) if x)
                f = point[p]
                if f:
                    point = [a - f * b for a, b in zip(point, row)]
            self._key = (tuple(point), echelon)
        return self._key

    def __eq__(self, other: Any) -> bool:
        """self == other"""
        if isinstance(other, AffineFlat):
            return self.canonical_key == other.canonical_key
        return NotImplemented

    def __hash__(self) -> int:
        """hash(self)"""
        return hash(self.canonical_key)

    def __repr__(self) -> str:
        """repr(self)"""
        base = ", ".join(str(x) for x in self._base)
        return f"AffineFlat(({base}), codim={self.codim})"


def flat_intersection(planes: Sequence[Hyperplane], gram: GramForm) \
        -> Optional[AffineFlat]:
    """Return the intersection of `planes`, or None if it is empty.

    The codimension of the resulting flat is the rank of the span of the
    plane normals.
    """
    if not planes:
        raise ValueError("At least one plane must be given.")
    n = gram.rank
    for plane in planes:
        if len(plane.normal) != n:
            raise DimensionMismatchError(n, len(plane.normal))
    sol = solve([plane.normal for plane in planes],
                [plane.offset for plane in planes])
    if sol is None:
        return None
    particular, kernel = sol
    return AffineFlat(particular, kernel, ambient_rank=n)


def foot_of_origin(flat: AffineFlat, gram: GramForm) \
        -> Tuple[QVectorT, Fraction]:
    """Return the point of `flat` closest to the origin and its norm².

    The foot p satisfies ⟨p, d⟩ = 0 for every direction d of the flat.
    """
    if flat.ambient_rank != gram.rank:
        raise DimensionMismatchError(gram.rank, flat.ambient_rank)
    base = flat.base
    dirs = flat.directions
    if not dirs:
        return base, norm2(base, gram)
    gd = [[inner(d, e, gram) for e in dirs] for d in dirs]
    rhs = [-inner(d, base, gram) for d in dirs]
    sol = solve(gd, rhs)
    assert sol is not None and not sol[1]
    t = sol[0]
    foot = tuple(b + sum((ti * d[i] for ti, d in zip(t, dirs)), Fraction(0))
                 for i, b in enumerate(base))
    return foot, norm2(foot, gram)
