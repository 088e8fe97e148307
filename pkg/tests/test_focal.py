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


"""Test driver for module focal"""

import math
import random
from fractions import Fraction as F
from typing import List, Optional, Sequence, Tuple

import pytest

from focaltorus import (
    Budget, BudgetExceededError, DimensionMismatchError, Lattice,
    ZeroVectorError, catalog, minimal_vectors,
    )
from focaltorus.focal import (
    BPlane, FocalClass, Separation, brillouin_index, classify,
    farey_directions, in_zone, iota, iota_by_ball, iota_by_segment, mu,
    radial_profile, sample_directions, separates, voronoi_relevant_vectors,
    zone_annulus,
    )
from focaltorus.quadspace import norm2

PointT = Tuple[F, ...]


def random_point(rnd: random.Random, n: int, scale: int = 9) -> PointT:
    return tuple(F(rnd.randint(-scale, scale), rnd.choice((2, 3, 4, 6)))
                 for _ in range(n))


def test_bplane(square: Lattice, hexagonal: Lattice) -> None:
    plane = BPlane((1, 0), square.gram)
    assert plane.vector == (1, 0)
    assert plane.normal == (2, 0)
    assert plane.offset == 1
    assert plane.value_at((F(1, 2), 5)) == 0
    assert plane == BPlane((1, 0), square.gram)
    assert plane != BPlane((1, 0), hexagonal.gram)
    assert repr(plane) == "BPlane((1, 0))"
    with pytest.raises(ZeroVectorError):
        BPlane((0, 0), square.gram)
    with pytest.raises(DimensionMismatchError):
        BPlane((1, 0, 0), square.gram)


@pytest.mark.parametrize(("w", "sep"),
                         [((1, 0), Separation.YES),
                          ((F(1, 2), 3), Separation.INCIDENT),
                          ((F(1, 4), 7), Separation.NO)],
                         ids=("yes", "incident", "no"))
def test_separates(square: Lattice, w: PointT, sep: Separation) -> None:
    assert separates(BPlane((1, 0), square.gram), (0, 0), w) is sep


@pytest.mark.parametrize(("v", "count"),
                         [((F(1, 4), 0), 0),
                          ((F(1, 2), 0), 1),
                          ((F(1, 2), F(1, 2)), 3),
                          ((0, 0), 0)],
                         ids=("interior", "edge", "corner", "origin"))
def test_mu(square: Lattice, v: PointT, count: int) -> None:
    n, planes = mu(square, v)
    assert n == count
    assert len(planes) == count


def test_mu_corner_planes(square: Lattice) -> None:
    _, planes = mu(square, (F(1, 2), F(1, 2)))
    assert sorted(p.vector for p in planes) == [(0, 1), (1, 0), (1, 1)]


@pytest.mark.parametrize(("v", "count"),
                         [((F(3, 4), 0), 1),
                          ((F(1, 4), 0), 0),
                          ((F(5, 2), 0), 16),
                          ((F(3, 2), F(1, 3)), 6)],
                         ids=lambda p: str(p))
def test_iota_square(square: Lattice, v: PointT, count: int) -> None:
    assert iota_by_ball(square, v) == count
    assert iota_by_segment(square, v) == count
    assert iota(square, v, verify=True) == count


def test_iota_zero(square: Lattice) -> None:
    with pytest.raises(ZeroVectorError):
        iota(square, (0, 0))


@pytest.mark.parametrize(("v", "index"),
                         [((F(1, 4), 0), 1),
                          ((F(1, 2), 0), 2),
                          ((F(1, 2), F(1, 2)), 4),
                          ((0, 0), 1)],
                         ids=("interior", "edge", "corner", "origin"))
def test_brillouin_index(square: Lattice, v: PointT, index: int) -> None:
    assert brillouin_index(square, v) == index


@pytest.mark.parametrize(("v", "expected"),
                         [((F(3, 4), 0), FocalClass(0, 1, 2, 0)),
                          ((F(1, 4), 0), FocalClass(0, 0, 1, 0)),
                          ((0, 0), FocalClass(0, 0, 1, 0))],
                         ids=("zone-2", "zone-1", "origin"))
def test_classify_interior(square: Lattice, v: PointT,
                           expected: FocalClass) -> None:
    fc = classify(square, v)
    assert fc == expected
    assert fc.sigma_index == 1
    assert not fc.is_boundary
    assert fc.zone == expected.iota + 1


def test_classify_corner(square: Lattice) -> None:
    fc = classify(square, (F(1, 2), F(1, 2)), verify=True)
    assert (fc.mu, fc.iota, fc.brillouin, fc.nu) == (3, 0, 4, 2)
    assert fc.sigma_index == 4
    assert fc.is_boundary
    assert fc.zone is None
    data = fc.as_dict()
    assert data['boundary'] is True
    assert data['planes'] == [[0, 1], [1, 0], [1, 1]]


def test_classify_dimension(square: Lattice) -> None:
    with pytest.raises(DimensionMismatchError):
        classify(square, (1, 2, 3))


def short_points(lattice: Lattice, rnd: random.Random,
                 count: int) -> List[PointT]:
    # combinations of minimal vectors, often on B-planes
    mins = minimal_vectors(lattice)
    res = []
    for _ in range(count):
        a, b = rnd.choice(mins), rnd.choice(mins)
        s = rnd.choice((F(1, 3), F(1, 2), F(2, 3), F(3, 4)))
        t = rnd.choice((0, F(1, 5), F(1, 3)))
        res.append(tuple(s * x + t * y for x, y in zip(a, b)))
    return res


def check_counting_identity(lattice: Lattice,
                            points: Sequence[PointT]) -> None:
    for v in points:
        if not any(v):
            continue
        fc = classify(lattice, v, verify=True)
        assert fc.brillouin == 1 + fc.iota + fc.mu
        assert fc.nu <= min(fc.mu, lattice.rank)


# coordinate scale per lattice, keeping |v|² small in rank 4 and 8
SCALES = {"Z2": 9, "A2": 9, "Z3": 9, "D4": 2, "E8": 1}


@pytest.mark.parametrize(("name", "n_samples"),
                         [("Z2", 150), ("A2", 150), ("Z3", 60), ("D4", 30),
                          ("E8", 10)],
                         ids=lambda p: str(p))
def test_counting_identity(name: str, n_samples: int) -> None:
    lattice = catalog(name)
    rnd = random.Random(name)
    check_counting_identity(
        lattice, [random_point(rnd, lattice.rank, SCALES[name])
                  for _ in range(n_samples)])


@pytest.mark.parametrize(("name", "n_samples"),
                         [("Z2", 40), ("A2", 40), ("D4", 30), ("E8", 10)],
                         ids=lambda p: str(p))
def test_counting_identity_on_walls(name: str, n_samples: int) -> None:
    lattice = catalog(name)
    rnd = random.Random(name)
    check_counting_identity(lattice, short_points(lattice, rnd, n_samples))


@pytest.mark.slow
@pytest.mark.parametrize("name", ["Z2", "A2", "Z3", "D4", "E8"],
                         ids=lambda p: str(p))
def test_counting_identity_many(name: str) -> None:
    lattice = catalog(name)
    rnd = random.Random(f"{name}-10000")
    check_counting_identity(
        lattice, [random_point(rnd, lattice.rank, SCALES[name])
                  for _ in range(10_000)])


@pytest.mark.parametrize("name", ["Z2", "A2", "Z3", "D4"],
                         ids=lambda p: str(p))
def test_classify_point_symmetry(name: str) -> None:
    lattice = catalog(name)
    rnd = random.Random(f"{name}-sym")
    points = [random_point(rnd, lattice.rank, SCALES[name])
              for _ in range(20)]
    points += short_points(lattice, rnd, 20)
    for v in points:
        fc = classify(lattice, v)
        other = classify(lattice, tuple(-x for x in v))
        assert (fc.mu, fc.iota, fc.brillouin, fc.nu) == \
            (other.mu, other.iota, other.brillouin, other.nu)


@pytest.mark.parametrize(("name", "u"),
                         [("Z2", (1, 0)), ("Z2", (2, 1)), ("A2", (1, 1)),
                          ("A2", (3, -1)), ("Z3", (1, 1, 2))],
                         ids=lambda p: str(p))
def test_ray_monotonicity(name: str, u: Tuple[int, ...]) -> None:
    lattice = catalog(name)
    last_b, last_zone = 1, 1
    for j in range(1, 33):
        fc = classify(lattice, tuple(F(j, 8) * x for x in u))
        assert fc.brillouin >= last_b
        last_b = fc.brillouin
        if fc.zone is not None:
            assert fc.zone >= last_zone
            last_zone = fc.zone


def test_classify_far_point_budget(square: Lattice) -> None:
    with pytest.raises(BudgetExceededError):
        classify(square, (10 ** 16 + F(1, 2), 0),
                 budget=Budget(max_points=10 ** 4))


def test_incidence_destroyed_by_perturbation(square: Lattice,
                                             hexagonal: Lattice) -> None:
    rnd = random.Random(99)
    for lattice in (square, hexagonal):
        for v in ((F(1, 2), F(1, 2)), (F(1, 2), 0), (F(1, 3), F(1, 3)),
                  (1, F(1, 2))):
            n, _ = mu(lattice, v)
            if n == 0:
                continue
            eps = F(1, 1000 + rnd.randint(0, 97))
            w = (v[0] + eps, v[1] + eps * F(1, 7))
            assert mu(lattice, w)[0] == 0


def test_in_zone(square: Lattice) -> None:
    assert in_zone(square, (F(3, 4), 0), 2)
    assert not in_zone(square, (F(3, 4), 0), 1)
    assert not in_zone(square, (F(1, 2), 0), 1)
    assert in_zone(square, (F(1, 2), 0), 2, closed=True)
    with pytest.raises(ValueError):
        in_zone(square, (0, 0), 0)


def test_radial_profile_axis(square: Lattice) -> None:
    profile = radial_profile(square, (1, 0), 3)
    assert [t for t, _ in profile.crossings] == [F(1, 2), 1, F(5, 4)]
    assert profile.crossings[0][1] == ((1, 0),)
    assert sorted(profile.crossings[1][1]) == [(1, -1), (1, 1), (2, 0)]
    assert sorted(profile.crossings[2][1]) == [(2, -1), (2, 1)]
    assert profile.zone_at(F(1, 4)) == 1
    assert profile.zone_at(F(3, 4)) == 2
    assert profile.zone_at(F(9, 8)) == 5
    assert profile.zone_interval(1) == (0, F(1, 2))
    assert profile.zone_interval(2) == (F(1, 2), 1)
    # three planes are crossed at t = 1
    assert profile.zone_interval(3) == (1, 1)
    assert profile.zone_interval(5) == (1, F(5, 4))
    with pytest.raises(ValueError):
        profile.zone_interval(7)


def test_radial_profile_diagonal(square: Lattice) -> None:
    profile = radial_profile(square, (1, 1), 1)
    t, lams = profile.crossings[0]
    assert t == F(1, 2)
    assert sorted(lams) == [(0, 1), (1, 0), (1, 1)]
    # zones 2 and 3 are skipped at the triple crossing
    assert profile.zone_interval(2) == (F(1, 2), F(1, 2))


def test_radial_profile_errors(square: Lattice) -> None:
    with pytest.raises(ZeroVectorError):
        radial_profile(square, (0, 0), 2)
    with pytest.raises(ValueError):
        radial_profile(square, (1, 0), 0)


@pytest.mark.parametrize(("name", "u"),
                         [("Z2", (3, 1)), ("A2", (1, 0)), ("A2", (2, -1)),
                          ("Z3", (1, 2, 3))],
                         ids=lambda p: str(p))
def test_profile_matches_classification(name: str,
                                        u: Tuple[int, ...]) -> None:
    lattice = catalog(name)
    profile = radial_profile(lattice, u, 4)
    prev = F(0)
    passed = 0
    for t, lams in profile.crossings:
        mid = (prev + t) / 2
        fc = classify(lattice, tuple(mid * x for x in u))
        assert fc.mu == 0
        assert fc.zone == passed + 1
        on_wall = classify(lattice, tuple(t * x for x in u))
        assert on_wall.mu >= len(lams)
        passed += len(lams)
        prev = t


def check_ray(lattice: Lattice, u: Sequence[F], k_max: int,
              n_samples: int) -> None:
    profile = radial_profile(lattice, u, k_max)
    prev = F(0)
    passed = 0
    for t, lams in profile.crossings:
        for j in range(1, n_samples + 1):
            s = prev + (t - prev) * F(j, n_samples + 1)
            fc = classify(lattice, tuple(s * x for x in profile.direction))
            assert fc.mu == 0
            assert fc.zone == passed + 1 == profile.zone_at(s)
        passed += len(lams)
        prev = t


@pytest.mark.parametrize("name", ["Z2", "A2"], ids=lambda p: str(p))
def test_rays_match_classification(name: str) -> None:
    lattice = catalog(name)
    for u in farey_directions(2):
        check_ray(lattice, u, 6, 2)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["Z2", "A2"], ids=lambda p: str(p))
def test_rays_match_classification_dense(name: str) -> None:
    lattice = catalog(name)
    dirs = farey_directions(9)
    assert len(dirs) == 224
    for u in dirs:
        check_ray(lattice, u, 10, 5)


# squared covering radius of the Dirichlet cell
COVERING_RADIUS2 = {"Z2": F(1, 2), "A2": F(2, 3)}


@pytest.mark.slow
@pytest.mark.parametrize("name", ["Z2", "A2"], ids=lambda p: str(p))
def test_zone_annulus_width_bounded(name: str) -> None:
    # λ in the open ball around v of radius |v| are k − 1 for v inside
    # zone k, so covolume·(k − 1) is within π·(|v| ± R_V)²
    lattice = catalog(name)
    dirs = farey_directions(20)
    assert len(dirs) == 1024
    k_min, k_max = 6, 30
    inner = {k: math.inf for k in range(k_min, k_max + 1)}
    outer = {k: 0.0 for k in range(k_min, k_max + 1)}
    for u in dirs:
        profile = radial_profile(lattice, u, k_max)
        u2 = norm2(profile.direction, lattice.gram)
        for k in inner:
            start, stop = profile.zone_interval(k)
            inner[k] = min(inner[k], math.sqrt(start * start * u2))
            outer[k] = max(outer[k], math.sqrt(stop * stop * u2))
    covolume = math.sqrt(lattice.det)
    r_v = math.sqrt(COVERING_RADIUS2[name])
    for k in inner:
        bound = (2 * r_v
                 + math.sqrt(covolume / math.pi) / (2 * math.sqrt(k - 1)))
        assert outer[k] - inner[k] <= bound + 1e-9


@pytest.mark.parametrize(("name", "k", "directions", "annulus"),
                         [("Z2", 1, [(1, 0), (1, 1)], (F(1, 4), F(1, 2))),
                          ("Z2", 2, [(1, 0), (1, 1)], (F(1, 4), 1)),
                          ("A2", 1, None, (F(1, 2), F(2, 3)))],
                         ids=("Z2-1", "Z2-2", "A2-1"))
def test_zone_annulus(name: str, k: int,
                      directions: Optional[Sequence[Tuple[int, ...]]],
                      annulus: Tuple[F, F]) -> None:
    assert zone_annulus(catalog(name), k, directions) == annulus


def test_zone_annulus_dense(square: Lattice) -> None:
    r2_min, r2_max = zone_annulus(square, 2)
    assert r2_min == F(1, 4)
    assert r2_max == 1
    r2_min, r2_max = zone_annulus(square, 3)
    assert r2_min == F(1, 2)
    assert r2_min < r2_max <= 4


def test_zone_annulus_threads(hexagonal: Lattice) -> None:
    dirs = farey_directions(3)
    assert zone_annulus(hexagonal, 2, dirs, threads=2) == \
        zone_annulus(hexagonal, 2, dirs)


def test_zone_annulus_errors(square: Lattice) -> None:
    with pytest.raises(ValueError):
        zone_annulus(square, 0)
    with pytest.raises(ValueError):
        zone_annulus(square, 1, [])
    with pytest.raises(ZeroVectorError):
        zone_annulus(square, 1, [(0, 0)])


def test_directions() -> None:
    dirs = farey_directions(1)
    assert len(dirs) == 8
    assert (F(1), F(1)) in dirs
    assert len(set(farey_directions(3))) == len(farey_directions(3))
    sample = sample_directions(4, 10, seed=5)
    assert sample == sample_directions(4, 10, seed=5)
    assert all(any(u) and len(u) == 4 for u in sample)


@pytest.mark.parametrize(("name", "count"),
                         [("Z2", 4), ("A2", 6), ("Z3", 6), ("Z4", 8),
                          ("D4", 24), ("E8", 240)],
                         ids=lambda p: str(p))
def test_voronoi_relevant_vectors(name: str, count: int) -> None:
    lattice = catalog(name)
    relevant = voronoi_relevant_vectors(lattice)
    assert len(relevant) == count
    assert all(tuple(-x for x in lam) in relevant for lam in relevant)


def test_voronoi_relevant_norms(hexagonal: Lattice) -> None:
    assert {norm2(lam, hexagonal.gram)
            for lam in voronoi_relevant_vectors(hexagonal)} == {2}


def test_voronoi_relevant_vectors_cube() -> None:
    # for ℤ³ every class of Λ / 2Λ but the trivial one is reached within
    # norm 3, far inside the budget
    relevant = voronoi_relevant_vectors(catalog('Z3'),
                                        budget=Budget(max_points=200_000))
    assert relevant == [(-1, 0, 0), (0, -1, 0), (0, 0, -1), (0, 0, 1),
                        (0, 1, 0), (1, 0, 0)]
