# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        isometry
# Purpose:     Decide isometry of lattices up to rescaling
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


"""Isometry of flat tori up to rescaling.

Two lattices with Gram matrices G₁ and G₂ are related by a scaled orthogonal
map iff there is a rational c > 0 and an integral unimodular U with
c · Uᵀ·G₁·U = G₂: an orthogonal map sending one lattice onto the other sends
a basis onto a basis, and the Gram matrix of the image basis is Uᵀ·G₁·U.

    >>> from focaltorus.catalog import catalog
    >>> from focaltorus.lattice import make_lattice
    >>> cert = is_isometric_up_to_scale(catalog('Z2'),
    ...                                 make_lattice([[2, 0], [0, 2]]))
    >>> cert.scale, cert.transform
    (Fraction(2, 1), ((1, 0), (0, 1)))
    >>> is_isometric_up_to_scale(catalog('Z2'), catalog('A2'))
    NotIsometric(invariant='sphere_counts', at=Fraction(1, 1), left=4, right=6)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .config import Budget, BudgetTracker
from .exceptions import (
    DimensionMismatchError, RankMismatchError, RankTooLargeError,
    )
from .lattice import (
    BallMode, Lattice, LatticePointT, enumerate_ball, minimal_norm2,
    reduce_basis, sphere_counts,
    )
from .quadspace import (
    IntMatrixT, QVectorT, VectorLikeT, int_inverse, mat_mul, mat_vec,
    qvector, transpose,
    )

# Public interface
__all__ = [
    'IsometryCertificate',
    'NotIsometric',
    'is_isometric_up_to_scale',
    'normalize_scale',
    'transport_point',
    ]

logger = logging.getLogger(__name__)

#: Largest rank for which isometry is decided exactly
MAX_EXACT_RANK = 8


@dataclass(frozen=True)
class IsometryCertificate:
    """Scale c and unimodular U with c · Uᵀ·G₁·U = G₂.

    The columns of U are the images of the basis of the second lattice,
    expressed in the basis of the first one.
    """

    scale: Fraction
    transform: IntMatrixT

    def verify(self, first: Lattice, second: Lattice) -> bool:
        """Return True if the certificate relates `first` and `second`."""
        u = self.transform
        if len(u) != first.rank or first.rank != second.rank:
            return False
        image = mat_mul(mat_mul(transpose(u), first.gram.entries), u)
        return all(self.scale * a == b
                   for row, ref in zip(image, second.gram.entries)
                   for a, b in zip(row, ref))

    def inverse(self) -> IsometryCertificate:
        """Return the certificate relating the lattices the other way."""
        return IsometryCertificate(1 / self.scale,
                                   int_inverse(self.transform))

    def as_dict(self) -> Dict[str, Any]:
        """Return the certificate as JSON-compatible dict."""
        return {'scale': str(self.scale),
                'transform': [list(row) for row in self.transform]}


@dataclass(frozen=True)
class NotIsometric:
    """Witness of non-isometry: the first invariant separating the lattices.

    `invariant` is one of 'sphere_counts' (number of vectors of normalized
    norm `at`), 'determinant' (of the normalized Gram matrices) or
    'exhausted_search'.
    """

    invariant: str
    at: Optional[Fraction]
    left: Any
    right: Any

    def as_dict(self) -> Dict[str, Any]:
        """Return the witness as JSON-compatible dict."""
        return {'invariant': self.invariant,
                'at': None if self.at is None else str(self.at),
                'left': str(self.left), 'right': str(self.right)}


IsometryResultT = Union[IsometryCertificate, NotIsometric]


def normalize_scale(lattice: Lattice, *,
                    budget: Optional[Budget] = None) \
        -> Tuple[Lattice, Fraction]:
    """Return the lattice rescaled to minimal norm 1 and the scale used."""
    m = minimal_norm2(lattice, budget=budget)
    if m == 1:
        return lattice, m
    return Lattice(lattice.gram.scaled(1 / m), lattice.name), m


def _first_difference(left: Dict[Fraction, int], right: Dict[Fraction, int]) \
        -> Optional[Tuple[Fraction, int, int]]:
    for norm in sorted(set(left) | set(right)):
        lm, rm = left.get(norm, 0), right.get(norm, 0)
        if lm != rm:
            return norm, lm, rm
    return None


class _ImageSearch:
    """Backtracking search for images of a reduced basis."""

    def __init__(self, target: Sequence[Sequence[Fraction]],
                 candidates: List[List[LatticePointT]],
                 source: Lattice, tracker: BudgetTracker):
        self.target = target
        self.candidates = candidates
        g_int, self.g_den = source.gram.integral()
        self.g_int = g_int
        n = len(target)
        # basis vectors with few candidates first
        self.order = sorted(range(n), key=lambda i: (len(candidates[i]), i))
        self.images: List[Optional[LatticePointT]] = [None] * n
        self.products: List[Optional[Tuple[int, ...]]] = [None] * n
        self.tracker = tracker

    def run(self) -> Optional[List[LatticePointT]]:
        if self._extend(0):
            return [img for img in self.images if img is not None]
        return None

    def _extend(self, depth: int) -> bool:
        if depth == len(self.order):
            return True
        i = self.order[depth]
        assigned = self.order[:depth]
        target = self.target
        for x in self.candidates[i]:
            self.tracker.charge(1, "isometry search nodes")
            ok = True
            for j in assigned:
                gx = self.products[j]
                assert gx is not None
                if Fraction(sum(a * b for a, b in zip(x, gx)),
                            self.g_den) != target[i][j]:
                    ok = False
                    break
            if not ok:
                continue
            self.images[i] = x
            self.products[i] = tuple(mat_vec(self.g_int, x))
            if self._extend(depth + 1):
                return True
        self.images[i] = None
        self.products[i] = None
        return False


def is_isometric_up_to_scale(first: Lattice, second: Lattice, *,
                             budget: Optional[Budget] = None) \
        -> IsometryResultT:
    """Decide whether the lattices are isometric up to rescaling.

    Returns:
        a verified certificate (scale c and unimodular U with
        c · Uᵀ·G₁·U = G₂) or a witness of non-isometry

    Raises:
        RankMismatchError: ranks differ
        RankTooLargeError: rank exceeds MAX_EXACT_RANK
        BudgetExceededError: the search exceeds `budget`
    """
    if first.rank != second.rank:
        raise RankMismatchError(first.rank, second.rank)
    if first.rank > MAX_EXACT_RANK:
        raise RankTooLargeError(first.rank, MAX_EXACT_RANK)
    budget = budget or Budget()
    norm1, s1 = normalize_scale(first, budget=budget)
    norm2_, s2 = normalize_scale(second, budget=budget)
    red2, u2 = reduce_basis(norm2_)
    red1, _ = reduce_basis(norm1)
    target = red2.gram.entries
    cutoff = max(max(row[i] for i, row in enumerate(target)),
                 max(row[i] for i, row in enumerate(red1.gram.entries)))
    counts1 = sphere_counts(norm1, cutoff, budget=budget)
    counts2 = sphere_counts(norm2_, cutoff, budget=budget)
    diff = _first_difference(counts1, counts2)
    if diff is not None:
        at, left, right = diff
        return NotIsometric('sphere_counts', at, left, right)
    det1, det2 = norm1.det, norm2_.det
    if det1 != det2:
        return NotIsometric('determinant', None, det1, det2)

    zero = (0,) * first.rank
    by_norm: Dict[Fraction, List[LatticePointT]] = {}
    candidates = []
    for i, row in enumerate(target):
        nrm = row[i]
        if nrm not in by_norm:
            # reverse lexicographic: positive leading coordinates first
            by_norm[nrm] = sorted(
                enumerate_ball(norm1, zero, nrm, BallMode.SPHERE,
                               budget=budget),
                reverse=True)
        candidates.append(by_norm[nrm])
    logger.debug("Isometry search: candidate counts %s.",
                 [len(c) for c in candidates])
    images = _ImageSearch(target, candidates, norm1, budget.start()).run()
    if images is None:
        return NotIsometric('exhausted_search', None, first.name,
                            second.name)
    x = transpose(images)               # columns: images of reduced basis
    u = tuple(tuple(int(v) for v in row)
              for row in mat_mul(x, int_inverse(u2)))
    cert = IsometryCertificate(s2 / s1, u)
    if not cert.verify(first, second):
        raise AssertionError("Isometry certificate failed verification.")
    return cert


def transport_point(certificate: IsometryCertificate, y: VectorLikeT) \
        -> QVectorT:
    """Map a point in the second lattice's basis to the first one's.

    Squared distances shrink by the certificate's scale, so the focal
    classification of y in the second torus equals that of the image in the
    first torus.
    """
    vec = qvector(y)
    u = certificate.transform
    if len(vec) != len(u):
        raise DimensionMismatchError(len(u), len(vec))
    return tuple(Fraction(x) for x in mat_vec(u, vec))
