# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        lattice
# Purpose:     Lattices given by Gram matrices and enumeration of their points
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


"""Lattices given by exact Gram matrices and enumeration of lattice points.

A flat torus ℝⁿ/Λ is specified by its lattice Λ, and Λ is specified (up to
isometry) by the Gram matrix of a basis:

    >>> hexagonal = make_lattice([[2, 1], [1, 2]], name='A2')
    >>> hexagonal.rank
    2
    >>> minimal_norm2(hexagonal)
    Fraction(2, 1)
    >>> len(minimal_vectors(hexagonal))
    6

Lattice points are integer coordinate tuples relative to the basis. Points
within a ball are found by a Fincke-Pohst style enumeration over an
LLL-reduced basis:

    >>> enumerate_ball(make_lattice([[1, 0], [0, 1]]), (Fraction(1, 2), 0),
    ...                Fraction(1, 4), BallMode.CLOSED)
    [(0, 0), (1, 0)]
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from enum import Enum
from fractions import Fraction
from multiprocessing import Pool
from typing import (
    Any, Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence,
    Tuple, Union,
    )

import numpy as np

from .config import Budget, BudgetTracker
from .exceptions import DimensionMismatchError
from .quadspace import (
    GramForm, IntMatrixT, QVectorT, VectorLikeT, identity, int_inverse, ldl,
    mat_vec, qvector,
    )
from .utils import ScalarLikeT, as_scalar, common_denominator

# Public interface
__all__ = [
    'BallMode',
    'Lattice',
    'LatticePointT',
    'enumerate_ball',
    'make_lattice',
    'minimal_norm2',
    'minimal_vectors',
    'reduce_basis',
    'sphere_counts',
    ]

logger = logging.getLogger(__name__)

#: Lattice point: integer coordinates relative to the lattice basis
LatticePointT = Tuple[int, ...]

LLL_DELTA = Fraction(3, 4)
EMBEDDING_TOLERANCE = 1e-9


class BallMode(Enum):
    """Which points of a ball are enumerated."""

    STRICT = 'strict'       # dist² < r²
    CLOSED = 'closed'       # dist² ≤ r²
    SPHERE = 'sphere'       # dist² = r²


BallModeLikeT = Union[BallMode, str]


class _Reduction(NamedTuple):
    gram: GramForm
    u: IntMatrixT           # columns: reduced basis in input coordinates
    u_inv: IntMatrixT
    low: Tuple[Tuple[float, ...], ...]
    diag: Tuple[float, ...]


class Lattice:
    """Lattice of rank n given by the Gram matrix of a basis.

    Args:
        gram: Gram matrix of the basis
        name: optional label
        embedding: optional n×n matrix whose rows are the basis vectors in
            an orthonormal frame (used for rendering only)

    Raises:
        ValueError: floating Gram of `embedding` does not match `gram`

    Instances are immutable.
    """

    __slots__ = ['_gram', '_name', '_embedding', '_reduction', '_min_norm2']

    _embedding: Optional[np.ndarray]
    _reduction: Optional[_Reduction]
    _min_norm2: Optional[Fraction]

    def __init__(self, gram: GramForm, name: Optional[str] = None,
                 embedding: Optional[Any] = None):
        if not isinstance(gram, GramForm):
            raise TypeError("'gram' must be a GramForm.")
        self._gram = gram
        self._name = name
        self._reduction = None
        self._min_norm2 = None
        if embedding is None:
            self._embedding = None
        else:
            emb = np.array(embedding, dtype=float)
            self._check_embedding(emb)
            self._embedding = emb

    def _check_embedding(self, emb: np.ndarray) -> None:
        n = self.rank
        if emb.shape != (n, n):
            raise DimensionMismatchError(n, emb.shape[0])
        expected = np.array(self._gram.as_floats())
        scale = max(1.0, float(np.abs(expected).max()))
        if np.abs(emb @ emb.T - expected).max() > EMBEDDING_TOLERANCE * scale:
            raise ValueError("Embedding does not match the Gram matrix.")

    @property
    def rank(self) -> int:
        """Rank of the lattice."""
        return self._gram.rank

    @property
    def gram(self) -> GramForm:
        """Gram matrix of the basis."""
        return self._gram

    @property
    def name(self) -> Optional[str]:
        """Label of the lattice (may be None)."""
        return self._name

    @property
    def det(self) -> Fraction:
        """Determinant of the Gram matrix (squared covolume)."""
        return self._gram.det

    @property
    def embedding(self) -> np.ndarray:
        """Rows are the basis vectors in an orthonormal frame.

        If no embedding was given, one is derived from the exact LDLᵀ
        decomposition of the Gram matrix.
        """
        if self._embedding is None:
            low, diag = ldl(self._gram)
            emb = (np.array([[float(x) for x in row] for row in low])
                   * np.sqrt(np.array([float(d) for d in diag])))
            self._check_embedding(emb)
            self._embedding = emb
        return self._embedding

    def _reduced(self) -> _Reduction:
        if self._reduction is None:
            gram, u = _lll(self._gram)
            low, diag = ldl(gram)
            self._reduction = _Reduction(
                gram, u, int_inverse(u),
                tuple(tuple(float(x) for x in row) for row in low),
                tuple(float(d) for d in diag))
        return self._reduction

    def renamed(self, name: Optional[str]) -> Lattice:
        """Return the same lattice with label `name`."""
        return Lattice(self._gram, name, self._embedding)

    def __eq__(self, other: Any) -> bool:
        """self == other

        Lattices are equal if their Gram matrices are equal; the name is
        ignored.
        """
        if isinstance(other, Lattice):
            return self._gram == other._gram
        return NotImplemented

    def __hash__(self) -> int:
        """hash(self)"""
        return hash(self._gram)

    def __repr__(self) -> str:
        """repr(self)"""
        if self._name is None:
            return f"Lattice(rank={self.rank})"
        return f"Lattice('{self._name}', rank={self.rank})"

    def __reduce__(self) -> Any:
        return (Lattice, (self._gram, self._name, self._embedding))


def make_lattice(gram: Iterable[VectorLikeT], name: Optional[str] = None) \
        -> Lattice:
    """Return a validated lattice with Gram matrix `gram`.

    Raises:
        NotSymmetricError: `gram` is not symmetric
        NotPositiveDefiniteError: `gram` is not positive definite
    """
    if isinstance(gram, GramForm):
        return Lattice(gram, name)
    return Lattice(GramForm(gram), name)


# basis reduction

def _gso(g: List[List[Fraction]]) \
        -> Tuple[List[List[Fraction]], List[Fraction]]:
    n = len(g)
    mu = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(0)] * n
    for i in range(n):
        for j in range(i):
            mu[i][j] = (g[i][j] - sum((mu[j][k] * mu[i][k] * b[k]
                                       for k in range(j)), Fraction(0))) / b[j]
        b[i] = g[i][i] - sum((mu[i][k] ** 2 * b[k] for k in range(i)),
                             Fraction(0))
    return mu, b


def _lll(gram: GramForm) -> Tuple[GramForm, IntMatrixT]:
    n = gram.rank
    g = [list(row) for row in gram.entries]
    t = [list(row) for row in identity(n)]       # rows: new basis vectors
    mu, b = _gso(g)
    n_swaps = 0
    k = 1
    while k < n:
        for j in reversed(range(k)):
            q = round(mu[k][j])
            if q:
                # b_k ← b_k − q·b_j
                g_kk = g[k][k] - 2 * q * g[k][j] + q * q * g[j][j]
                for m in range(n):
                    if m != k:
                        g[k][m] -= q * g[j][m]
                        g[m][k] = g[k][m]
                g[k][k] = g_kk
                t[k] = [a - q * c for a, c in zip(t[k], t[j])]
                for m in range(j):
                    mu[k][m] -= q * mu[j][m]
                mu[k][j] -= q
        if b[k] < (LLL_DELTA - mu[k][k - 1] ** 2) * b[k - 1]:
            g[k], g[k - 1] = g[k - 1], g[k]
            for row in g:
                row[k], row[k - 1] = row[k - 1], row[k]
            t[k], t[k - 1] = t[k - 1], t[k]
            mu, b = _gso(g)
            n_swaps += 1
            k = max(k - 1, 1)
        else:
            k += 1
    logger.debug("LLL reduction of rank %d form done after %d swaps.",
                 n, n_swaps)
    u = tuple(tuple(row) for row in zip(*t))
    return GramForm(g), u


def reduce_basis(lattice: Lattice) -> Tuple[Lattice, IntMatrixT]:
    """Return the LLL-reduced (δ = 3/4) lattice and the change of basis.

    Returns:
        lattice with reduced Gram matrix and unimodular integer matrix U
        with Uᵀ·G·U = G_reduced (the columns of U are the reduced basis
        vectors in the coordinates of the input basis)
    """
    red = lattice._reduced()
    return Lattice(red.gram, lattice.name), red.u


# enumeration kernel

class _Kernel:
    """Enumerates y ∈ ℤⁿ with Q(y − c) ≤ r² for a reduced Gram form.

    The float Cholesky data only prune the search tree, with a tolerance;
    every leaf is decided with exact integer arithmetic.
    """

    __slots__ = ['n', 'g_int', 'c_num', 'c_den', 'cf', 'low', 'diag',
                 'r2f', 'tol', 'bound_num', 'bound_den']

    def __init__(self, red: _Reduction, center: QVectorT, r2: Fraction):
        self.n = red.gram.rank
        g_int, g_den = red.gram.integral()
        self.g_int = g_int
        den = common_denominator(center)
        self.c_den = den
        self.c_num = tuple(int(c * den) for c in center)
        self.cf = tuple(float(c) for c in center)
        self.low = red.low
        self.diag = red.diag
        self.r2f = float(r2)
        self.tol = 1e-9 * (1.0 + self.r2f)
        # Q(y − c) = vᵀ·G_int·v / (g_den·den²) with v = den·y − c_num
        self.bound_num = r2.numerator * g_den * den * den
        self.bound_den = r2.denominator

    def _interval(self, i: int, y: List[int], partial: float) \
            -> Optional[Tuple[int, int, float]]:
        rem = self.r2f - partial + self.tol
        if rem < 0:
            return None
        cf = self.cf
        low = self.low
        ctr = cf[i]
        for j in range(i + 1, self.n):
            ctr -= low[j][i] * (y[j] - cf[j])
        w = math.sqrt(rem / self.diag[i])
        eps = 1e-9 * (1.0 + abs(ctr) + w)
        return math.ceil(ctr - w - eps), math.floor(ctr + w + eps), ctr

    def top_range(self) -> range:
        """Candidate values of the outermost coordinate."""
        interval = self._interval(self.n - 1, [0] * self.n, 0.0)
        if interval is None:
            return range(0)
        return range(interval[0], interval[1] + 1)

    def walk(self, top_values: Iterable[int],
             visit: Callable[[List[int], int], None],
             tracker: BudgetTracker) -> None:
        """Call `visit(y, q)` for every y within the closed bound.

        q is the exact integer numerator of the norm of y − c, comparable
        against `bound_num` / `bound_den`. `top_values` is consumed lazily.
        """
        n = self.n
        y = [0] * n
        self._descend(n - 1, y, [0] * n, 0, 0.0, visit, tracker, top_values)

    def _descend(self, i: int, y: List[int], s: List[int], q_acc: int,
                 partial: float, visit: Callable[[List[int], int], None],
                 tracker: BudgetTracker,
                 values: Optional[Iterable[int]] = None) -> None:
        interval = self._interval(i, y, partial)
        if interval is None:
            return
        lo, hi, ctr = interval
        if values is None:
            values = range(lo, hi + 1)
        d_i = self.diag[i]
        limit = self.r2f + self.tol
        g_row = self.g_int[i]
        g_ii = g_row[i]
        s_i = s[i]
        den = self.c_den
        c_i = self.c_num[i]
        bound = self.bound_num
        bound_den = self.bound_den
        for yi in values:
            dist = yi - ctr
            p_new = partial + d_i * dist * dist
            if p_new > limit:
                # the float slack may admit many values when r² is huge
                tracker.charge(1, "enumerated lattice points")
                continue
            vi = den * yi - c_i
            q_new = q_acc + 2 * vi * s_i + g_ii * vi * vi
            y[i] = yi
            if i == 0:
                tracker.charge(1, "enumerated lattice points")
                if q_new * bound_den <= bound:
                    visit(y, q_new)
            else:
                s_new = [s[k] + self.g_int[k][i] * vi for k in range(i)]
                self._descend(i - 1, y, s_new, q_new, p_new, visit, tracker)
        y[i] = 0


def _accept(mode: BallMode, lhs: int, rhs: int) -> bool:
    if mode is BallMode.STRICT:
        return lhs < rhs
    if mode is BallMode.SPHERE:
        return lhs == rhs
    return lhs <= rhs


def _collect_points(args: Tuple[_Kernel, Sequence[int], BallMode, Budget]) \
        -> Tuple[List[LatticePointT], int]:
    kernel, top_values, mode, budget = args
    tracker = budget.start()
    found: List[LatticePointT] = []
    bound = kernel.bound_num
    bound_den = kernel.bound_den

    def visit(y: List[int], q: int) -> None:
        if _accept(mode, q * bound_den, bound):
            found.append(tuple(y))

    kernel.walk(top_values, visit, tracker)
    return found, tracker.count


def _count_norms(args: Tuple[_Kernel, Sequence[int], Budget]) \
        -> Tuple[Dict[int, int], int]:
    kernel, top_values, budget = args
    tracker = budget.start()
    counts: Counter[int] = Counter()

    def visit(y: List[int], q: int) -> None:
        counts[q] += 1

    kernel.walk(top_values, visit, tracker)
    return dict(counts), tracker.count


def _run(func: Callable[[Any], Tuple[Any, int]], kernel: _Kernel,
         extra: Tuple[Any, ...], budget: Budget, threads: int) \
        -> List[Any]:
    # ranges stay lazy: the outer interval may be far larger than the budget
    top = kernel.top_range()
    n_tasks = min(threads, max(top.stop - top.start, 0))
    if n_tasks > 1:
        tasks = [(kernel, top[k::n_tasks], *extra, budget)
                 for k in range(n_tasks)]
        with Pool(n_tasks) as pool:
            parts = pool.map(func, tasks)
    else:
        parts = [func((kernel, top, *extra, budget))]
    tracker = budget.start()
    tracker.charge(sum(n_items for _, n_items in parts),
                   "enumerated lattice points")
    logger.debug("Enumeration visited %d leaves in %d branch(es).",
                 tracker.count, len(parts))
    return [res for res, _ in parts]


def _prepare(lattice: Lattice, center: VectorLikeT, r2: ScalarLikeT) \
        -> Tuple[_Reduction, QVectorT, Tuple[int, ...], Fraction]:
    c = qvector(center)
    if len(c) != lattice.rank:
        raise DimensionMismatchError(lattice.rank, len(c))
    radius2 = as_scalar(r2)
    if radius2 < 0:
        raise ValueError("Squared radius must be >= 0.")
    red = lattice._reduced()
    c_red = tuple(Fraction(x) for x in mat_vec(red.u_inv, c))
    # enumerate around the fractional part, floats only see values in [0, 1)
    shift = tuple(math.floor(x) for x in c_red)
    return (red, tuple(x - s for x, s in zip(c_red, shift)), shift,
            radius2)


def enumerate_ball(lattice: Lattice, center: VectorLikeT, r2: ScalarLikeT,
                   mode: BallModeLikeT = BallMode.CLOSED, *,
                   budget: Optional[Budget] = None,
                   threads: int = 1) -> List[LatticePointT]:
    """Return the lattice points λ with dist²(center, λ) {<, ≤, =} r2.

    Args:
        lattice: lattice to enumerate
        center: center of the ball in basis coordinates
        r2: squared radius (>= 0)
        mode: STRICT (<), CLOSED (≤) or SPHERE (=)
        budget: resource budget (default: `Budget()`)
        threads: number of worker processes for the outermost branch

    Returns:
        list of lattice points in lexicographic order

    Raises:
        DimensionMismatchError: `center` has wrong length
        BudgetExceededError: enumeration exceeds `budget`
    """
    mode = BallMode(mode)
    budget = budget or Budget()
    red, c_red, shift, radius2 = _prepare(lattice, center, r2)
    kernel = _Kernel(red, c_red, radius2)
    parts = _run(_collect_points, kernel, (mode,), budget, threads)
    u = red.u
    points = sorted(tuple(mat_vec(u, [a + s for a, s in zip(y, shift)]))
                    for part in parts for y in part)
    return points


def sphere_counts(lattice: Lattice, cutoff2: ScalarLikeT, *,
                  budget: Optional[Budget] = None,
                  threads: int = 1) -> Dict[Fraction, int]:
    """Return the number of lattice vectors per norm ≤ `cutoff2`.

    The origin is counted at norm 0. Keys are sorted ascending.
    """
    budget = budget or Budget()
    red, c_red, _, radius2 = _prepare(lattice, (0,) * lattice.rank,
                                      cutoff2)
    kernel = _Kernel(red, c_red, radius2)
    parts = _run(_count_norms, kernel, (), budget, threads)
    _, g_den = red.gram.integral()
    total: Counter[int] = Counter()
    for part in parts:
        total.update(part)
    return {Fraction(q, g_den): total[q] for q in sorted(total)}


def minimal_norm2(lattice: Lattice, *,
                  budget: Optional[Budget] = None) -> Fraction:
    """Return the smallest norm of a nonzero lattice vector."""
    if lattice._min_norm2 is None:
        red = lattice._reduced()
        r2 = min(red.gram[i][i] for i in range(lattice.rank))
        while True:
            counts = sphere_counts(lattice, r2, budget=budget)
            nonzero = [norm for norm in counts if norm > 0]
            if nonzero:
                lattice._min_norm2 = nonzero[0]
                break
            r2 *= 2
    return lattice._min_norm2


def minimal_vectors(lattice: Lattice, *,
                    budget: Optional[Budget] = None) -> List[LatticePointT]:
    """Return the lattice vectors of minimal nonzero norm."""
    return enumerate_ball(lattice, (0,) * lattice.rank,
                          minimal_norm2(lattice, budget=budget),
                          BallMode.SPHERE, budget=budget)
