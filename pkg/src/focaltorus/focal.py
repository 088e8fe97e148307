# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        focal
# Purpose:     Focal decomposition and Brillouin zones of a flat torus
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


r"""Focal decomposition and Brillouin zones of a flat torus ℝⁿ/Λ.

For a nonzero lattice vector λ the B-plane V_λ is the perpendicular bisector
of 0 and λ, i.e. the solution set of 2⟨v, λ⟩ = ⟨λ, λ⟩. A tangent vector v
is classified by

* μ(v): the number of B-planes containing v,
* ι(v): the number of B-planes meeting the open segment (0, v),
* B(v) = 1 + ι(v) + μ(v): the Brillouin index, i.e. the number of lattice
  points λ with |v − λ| ≤ |v|.

v lies in the interior of the k-th Brillouin zone iff μ(v) = 0 and
ι(v) = k − 1.

    >>> from fractions import Fraction as F
    >>> from focaltorus.lattice import make_lattice
    >>> square = make_lattice([[1, 0], [0, 1]], name='Z2')
    >>> fc = classify(square, (F(1, 2), F(1, 2)))
    >>> fc.mu, fc.iota, fc.brillouin, fc.sigma_index, fc.nu
    (3, 0, 4, 4, 2)
    >>> fc.is_boundary
    True
    >>> classify(square, (F(3, 4), 0)).zone
    2

Along a ray t ↦ t·u the zone index changes exactly at the crossings of
B-planes:

    >>> profile = radial_profile(square, (1, 0), 3)
    >>> [str(t) for t, _ in profile.crossings]
    ['1/2', '1', '5/4']
    >>> zone_annulus(square, 1, [(1, 0), (1, 1)])
    (Fraction(1, 4), Fraction(1, 2))
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from multiprocessing import Pool
from typing import (
    Any, Dict, Iterable, List, Optional, Sequence, Tuple,
    )

from .config import Budget
from .exceptions import (
    DimensionMismatchError, InconsistentCountError, ZeroVectorError,
    )
from .lattice import (
    BallMode, Lattice, LatticePointT, enumerate_ball, minimal_norm2,
    )
from .quadspace import (
    GramForm, QVectorT, VectorLikeT, inner, mat_vec, norm2, qvector, rank,
    )

# Public interface
__all__ = [
    'BPlane',
    'FocalClass',
    'RadialProfile',
    'Separation',
    'brillouin_index',
    'classify',
    'farey_directions',
    'in_zone',
    'iota',
    'iota_by_ball',
    'iota_by_segment',
    'mu',
    'radial_profile',
    'sample_directions',
    'separates',
    'voronoi_relevant_vectors',
    'zone_annulus',
    ]

logger = logging.getLogger(__name__)

#: Crossing of a ray with B-planes: parameter t and the entering λ's
CrossingT = Tuple[Fraction, Tuple[LatticePointT, ...]]


class BPlane:
    """Perpendicular bisector V_λ of 0 and the nonzero lattice vector λ.

    Args:
        vector: the lattice vector λ
        gram: Gram matrix of the lattice

    Raises:
        ZeroVectorError: λ is zero

    The plane is stored by its linear equation normal · v = offset with
    normal = 2·G·λ and offset = ⟨λ, λ⟩.
    """

    __slots__ = ['_vector', '_normal', '_offset']

    def __init__(self, vector: Sequence[int], gram: GramForm):
        lam = tuple(int(x) for x in vector)
        if len(lam) != gram.rank:
            raise DimensionMismatchError(gram.rank, len(lam))
        if not any(lam):
            raise ZeroVectorError("lattice vector")
        self._vector = lam
        self._normal = tuple(2 * x for x in mat_vec(gram.entries, lam))
        self._offset = norm2(lam, gram)

    @property
    def vector(self) -> LatticePointT:
        """The lattice vector λ."""
        return self._vector

    @property
    def normal(self) -> QVectorT:
        """Coefficients of the plane's equation (2·G·λ)."""
        return self._normal

    @property
    def offset(self) -> Fraction:
        """Right hand side of the plane's equation (⟨λ, λ⟩)."""
        return self._offset

    def value_at(self, v: Sequence[Any]) -> Fraction:
        """Return 2⟨v, λ⟩ − ⟨λ, λ⟩ (zero iff v lies on the plane)."""
        if len(v) != len(self._normal):
            raise DimensionMismatchError(len(self._normal), len(v))
        return Fraction(sum(a * b for a, b in zip(self._normal, v))) \
            - self._offset

    def __eq__(self, other: Any) -> bool:
        """self == other"""
        if isinstance(other, BPlane):
            return (self._vector == other._vector
                    and self._normal == other._normal)
        return NotImplemented

    def __hash__(self) -> int:
        """hash(self)"""
        return hash((self._vector, self._normal))

    def __repr__(self) -> str:
        """repr(self)"""
        return f"BPlane({self._vector})"


class Separation(Enum):
    """Position of two points relative to a B-plane."""

    YES = 'yes'
    NO = 'no'
    INCIDENT = 'incident'


def separates(plane: BPlane, v: VectorLikeT, w: VectorLikeT) -> Separation:
    """Return whether `plane` separates the points `v` and `w`."""
    sv = plane.value_at(qvector(v))
    sw = plane.value_at(qvector(w))
    if sv == 0 or sw == 0:
        return Separation.INCIDENT
    if (sv > 0) != (sw > 0):
        return Separation.YES
    return Separation.NO


@dataclass(frozen=True)
class FocalClass:
    """Exact classification of a tangent vector.

    `zone` is k if the vector lies in the interior of the k-th Brillouin
    zone, None if it lies on a zone boundary (mu ≥ 1).
    """

    mu: int
    iota: int
    brillouin: int
    nu: int
    planes: Tuple[BPlane, ...] = ()

    @property
    def sigma_index(self) -> int:
        """Index i of the focal component σ_i containing the vector."""
        return self.mu + 1

    @property
    def is_boundary(self) -> bool:
        """True if the vector lies on at least one B-plane."""
        return self.mu > 0

    @property
    def zone(self) -> Optional[int]:
        """Index of the open zone containing the vector (None on walls)."""
        return None if self.mu else self.iota + 1

    def as_dict(self) -> Dict[str, Any]:
        """Return the record as JSON-compatible dict."""
        return {
            'mu': self.mu,
            'iota': self.iota,
            'brillouin': self.brillouin,
            'sigma_index': self.sigma_index,
            'zone': self.zone,
            'boundary': self.is_boundary,
            'nu': self.nu,
            'planes': [list(p.vector) for p in self.planes],
            }


def _as_point(lattice: Lattice, v: VectorLikeT) -> QVectorT:
    vec = qvector(v)
    if len(vec) != lattice.rank:
        raise DimensionMismatchError(lattice.rank, len(vec))
    return vec


def mu(lattice: Lattice, v: VectorLikeT, *,
       budget: Optional[Budget] = None) -> Tuple[int, List[BPlane]]:
    """Return the number of B-planes through `v` and the planes."""
    vec = _as_point(lattice, v)
    if not any(vec):
        return 0, []
    r2 = norm2(vec, lattice.gram)
    planes = [BPlane(lam, lattice.gram)
              for lam in enumerate_ball(lattice, vec, r2, BallMode.SPHERE,
                                        budget=budget)
              if any(lam)]
    return len(planes), planes


def iota_by_ball(lattice: Lattice, v: VectorLikeT, *,
                 budget: Optional[Budget] = None) -> int:
    """Return ι(v) as number of λ strictly closer to `v` than the origin."""
    vec = _as_point(lattice, v)
    if not any(vec):
        raise ZeroVectorError()
    r2 = norm2(vec, lattice.gram)
    return len(enumerate_ball(lattice, vec, r2, BallMode.STRICT,
                              budget=budget))


def iota_by_segment(lattice: Lattice, v: VectorLikeT, *,
                    budget: Optional[Budget] = None) -> int:
    """Return ι(v) as number of B-planes crossing the open segment (0, v).

    V_λ meets the segment at t = ⟨λ, λ⟩ / (2⟨v, λ⟩), if ⟨v, λ⟩ > 0. For
    t < 1 this forces |λ| < 2|v|.
    """
    vec = _as_point(lattice, v)
    if not any(vec):
        raise ZeroVectorError()
    gram = lattice.gram
    r2 = 4 * norm2(vec, gram)
    count = 0
    for lam in enumerate_ball(lattice, (0,) * lattice.rank, r2,
                              BallMode.STRICT, budget=budget):
        s = inner(vec, lam, gram)
        if s > 0 and norm2(lam, gram) < 2 * s:
            count += 1
    return count


def iota(lattice: Lattice, v: VectorLikeT, *, verify: bool = False,
         budget: Optional[Budget] = None) -> int:
    """Return ι(v), the number of B-planes meeting the open segment (0, v).

    Args:
        lattice: the lattice
        v: nonzero vector
        verify: if True, ι(v) is also counted by crossing the segment and
            both counts must agree (the `classify` command of the CLI
            always does so, unless `--no-verify` is given)
        budget: resource budget

    Raises:
        ZeroVectorError: `v` is zero
        InconsistentCountError: the two counts disagree
    """
    res = iota_by_ball(lattice, v, budget=budget)
    if verify:
        other = iota_by_segment(lattice, v, budget=budget)
        if other != res:
            raise InconsistentCountError(
                f"iota({tuple(str(x) for x in qvector(v))}): ball count "
                f"{res} != segment count {other}.")
    return res


def brillouin_index(lattice: Lattice, v: VectorLikeT, *,
                    budget: Optional[Budget] = None) -> int:
    """Return the number of λ with |v − λ| ≤ |v| (origin included)."""
    vec = _as_point(lattice, v)
    if not any(vec):
        return 1
    r2 = norm2(vec, lattice.gram)
    return len(enumerate_ball(lattice, vec, r2, BallMode.CLOSED,
                              budget=budget))


def classify(lattice: Lattice, v: VectorLikeT, *, verify: bool = False,
             budget: Optional[Budget] = None) -> FocalClass:
    """Return the focal classification of `v`.

    Raises:
        InconsistentCountError: B(v) != 1 + ι(v) + μ(v)
    """
    vec = _as_point(lattice, v)
    if not any(vec):
        return FocalClass(mu=0, iota=0, brillouin=1, nu=0)
    n_mu, planes = mu(lattice, vec, budget=budget)
    n_iota = iota(lattice, vec, verify=verify, budget=budget)
    b_idx = brillouin_index(lattice, vec, budget=budget)
    if b_idx != 1 + n_iota + n_mu:
        raise InconsistentCountError(
            f"Brillouin index {b_idx} != 1 + {n_iota} + {n_mu}.")
    nu = rank([p.vector for p in planes]) if planes else 0
    return FocalClass(mu=n_mu, iota=n_iota, brillouin=b_idx, nu=nu,
                      planes=tuple(planes))


def in_zone(lattice: Lattice, v: VectorLikeT, k: int,
            closed: bool = False, *,
            budget: Optional[Budget] = None) -> bool:
    """Return True if `v` belongs to the k-th Brillouin zone.

    With `closed` False the zone is the open set Int(B_k) (μ = 0 and
    ι = k − 1), otherwise the level set {v | B(v) = k}.
    """
    if k < 1:
        raise ValueError("Zone index must be >= 1.")
    fc = classify(lattice, v, budget=budget)
    if closed:
        return fc.brillouin == k
    return fc.zone == k


@dataclass(frozen=True)
class RadialProfile:
    """Crossings of the ray t ↦ t·u with B-planes.

    `crossings` holds the first distinct parameters t > 0 in increasing
    order, each with the λ's whose planes are crossed at t.
    """

    direction: QVectorT
    crossings: Tuple[CrossingT, ...]

    def zone_at(self, t: Fraction) -> int:
        """Return 1 + the number of planes crossed strictly before t.

        For t between two crossings this is the zone index of t·u.

        Raises:
            ValueError: t lies beyond the last recorded crossing
        """
        if not self.crossings or t > self.crossings[-1][0]:
            raise ValueError("Parameter lies beyond the recorded crossings.")
        return 1 + sum(len(lams) for tc, lams in self.crossings if tc < t)

    def zone_interval(self, k: int) -> Tuple[Fraction, Fraction]:
        """Return the closed parameter interval of zone `k` along the ray.

        If the ray skips zone k (several planes crossed at once), both
        endpoints equal the parameter of that crossing.

        Raises:
            ValueError: the profile does not reach beyond zone k
        """
        if k < 1:
            raise ValueError("Zone index must be >= 1.")
        start: Optional[Fraction] = Fraction(0) if k == 1 else None
        passed = 0
        for t, lams in self.crossings:
            passed += len(lams)
            if start is None and passed >= k - 1:
                start = t
            if passed >= k:
                assert start is not None
                return start, t
        raise ValueError(f"Profile too short to bound zone {k}.")


def _crossings(lattice: Lattice, u: QVectorT, t_max: Fraction,
               budget: Optional[Budget]) \
        -> Dict[Fraction, List[LatticePointT]]:
    # t_λ ≤ T  ⟺  |λ − T·u|² ≤ T²·|u|²  (λ ≠ 0)
    gram = lattice.gram
    center = tuple(t_max * x for x in u)
    res: Dict[Fraction, List[LatticePointT]] = {}
    for lam in enumerate_ball(lattice, center, t_max * t_max * norm2(u, gram),
                              BallMode.CLOSED, budget=budget):
        if any(lam):
            t = norm2(lam, gram) / (2 * inner(u, lam, gram))
            res.setdefault(t, []).append(lam)
    return res


def radial_profile(lattice: Lattice, u: VectorLikeT, k_max: int, *,
                   budget: Optional[Budget] = None) -> RadialProfile:
    """Return the first `k_max` crossings of the ray t ↦ t·u.

    Raises:
        ZeroVectorError: `u` is zero
    """
    vec = _as_point(lattice, u)
    if not any(vec):
        raise ZeroVectorError("direction")
    if k_max < 1:
        raise ValueError("'k_max' must be >= 1.")
    # t_λ ≥ |λ| / (2|u|), so start near the scale of the shortest vector
    scale = math.sqrt(minimal_norm2(lattice) / norm2(vec, lattice.gram))
    t_max = max(Fraction(scale).limit_denominator(1 << 16),
                Fraction(1, 1 << 16))
    while True:
        found = _crossings(lattice, vec, t_max, budget)
        if len(found) >= k_max:
            break
        t_max *= 2
    crossings = tuple((t, tuple(found[t])) for t in sorted(found)[:k_max])
    return RadialProfile(vec, crossings)


def _zone_endpoints(args: Tuple[Lattice, QVectorT, int, Optional[Budget]]) \
        -> List[Fraction]:
    lattice, u, k, budget = args
    profile = radial_profile(lattice, u, k, budget=budget)
    start, stop = profile.zone_interval(k)
    u2 = norm2(u, lattice.gram)
    return [t * t * u2 for t in (start, stop) if t > 0]


def zone_annulus(lattice: Lattice, k: int,
                 directions: Optional[Iterable[VectorLikeT]] = None, *,
                 budget: Optional[Budget] = None,
                 threads: int = 1) -> Tuple[Fraction, Fraction]:
    """Return (r², R²) bounding zone `k` over the sampled `directions`.

    r² and R² are the minimum and maximum squared distance from the origin
    of the zone's interval endpoints along each ray. The origin itself is
    not an endpoint, so for k = 1 the pair estimates the in- and
    circumradius² of the Dirichlet cell.

    If `directions` is None, Farey directions are used in rank 2 and
    seeded random directions otherwise.

    Raises:
        ZeroVectorError: a direction is zero
    """
    if k < 1:
        raise ValueError("Zone index must be >= 1.")
    if directions is None:
        if lattice.rank == 2:
            dirs = farey_directions(8)
        else:
            dirs = sample_directions(lattice.rank, 64)
    else:
        dirs = [_as_point(lattice, u) for u in directions]
    if not dirs:
        raise ValueError("At least one direction must be given.")
    for u in dirs:
        if not any(u):
            raise ZeroVectorError("direction")
    tasks = [(lattice, u, k, budget) for u in dirs]
    if threads > 1 and len(tasks) > 1:
        with Pool(min(threads, len(tasks))) as pool:
            parts = pool.map(_zone_endpoints, tasks)
    else:
        parts = [_zone_endpoints(task) for task in tasks]
    values = [r2 for part in parts for r2 in part]
    logger.info("Zone %d sampled along %d directions.", k, len(dirs))
    return min(values), max(values)


def farey_directions(order: int) -> List[QVectorT]:
    """Return the primitive planar directions (q, p) with slopes from the
    Farey sequence of `order`, closed under the symmetries of the square.

    >>> len(farey_directions(1))
    8
    """
    if order < 1:
        raise ValueError("Order must be >= 1.")
    octant = {(q, p) for q in range(1, order + 1) for p in range(q + 1)
              if math.gcd(p, q) == 1}
    dirs = set()
    for q, p in octant:
        for a, b in ((q, p), (p, q)):
            for sa in (1, -1):
                for sb in (1, -1):
                    dirs.add((sa * a, sb * b))
    return [(Fraction(a), Fraction(b)) for a, b in sorted(dirs)]


def sample_directions(rank: int, count: int, seed: int = 0,
                      box: int = 8) -> List[QVectorT]:
    """Return `count` random nonzero integer directions in [−box, box]^rank.

    The sample is reproducible for a given `seed`.
    """
    if rank < 1 or count < 1:
        raise ValueError("'rank' and 'count' must be >= 1.")
    rnd = random.Random(seed)
    res: List[QVectorT] = []
    while len(res) < count:
        v = [rnd.randint(-box, box) for _ in range(rank)]
        if any(v):
            res.append(tuple(Fraction(x) for x in v))
    return res


def voronoi_relevant_vectors(lattice: Lattice, *,
                             budget: Optional[Budget] = None) \
        -> List[LatticePointT]:
    """Return the λ whose B-planes carry a facet of the first zone.

    λ is relevant iff ±λ are the only shortest vectors of the coset λ + 2Λ.
    """
    n = lattice.rank
    gram = lattice.gram
    n_classes = 2 ** n - 1
    r2 = minimal_norm2(lattice, budget=budget)
    while True:
        shortest: Dict[Tuple[int, ...], Tuple[Fraction, List[LatticePointT]]]
        shortest = {}
        for lam in enumerate_ball(lattice, (0,) * n, r2, BallMode.CLOSED,
                                  budget=budget):
            cls = tuple(x % 2 for x in lam)
            # 2Λ (origin included) is not one of the 2ⁿ − 1 classes
            if not any(cls):
                continue
            nrm = norm2(lam, gram)
            best = shortest.get(cls)
            if best is None or nrm < best[0]:
                shortest[cls] = (nrm, [lam])
            elif nrm == best[0]:
                best[1].append(lam)
        if len(shortest) == n_classes:
            break
        r2 *= 2
    return sorted(lam for _, lams in shortest.values() if len(lams) == 2
                  for lam in lams)
