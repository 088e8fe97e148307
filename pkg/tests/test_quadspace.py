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


"""Test driver for module quadspace"""

import pickle
import random
from dataclasses import dataclass
from fractions import Fraction as F
from typing import Any, List, Sequence, Tuple

import pytest

from focaltorus.exceptions import (
    DimensionMismatchError, NotPositiveDefiniteError, NotSymmetricError,
    )
from focaltorus.quadspace import (
    AffineFlat, GramForm, determinant, dist2, flat_intersection,
    foot_of_origin, inner, int_inverse, ldl, mat_mul, norm2, qvector, rank,
    rref, solve, transpose,
    )

Z2 = GramForm([[1, 0], [0, 1]])
HEX = GramForm([[2, 1], [1, 2]])


@dataclass(frozen=True)
class Plane:
    normal: Tuple[F, ...]
    offset: F


def bisector(lam: Sequence[int], gram: GramForm) -> Plane:
    normal = tuple(2 * sum(g * x for g, x in zip(row, lam))
                   for row in gram.entries)
    return Plane(normal, norm2(lam, gram))


def det_oracle(m: List[List[F]]) -> F:
    # Laplace expansion along the first row
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j]
               * det_oracle([row[:j] + row[j + 1:] for row in m[1:]])
               for j in range(len(m)))


@pytest.mark.parametrize(("u", "v", "gram", "ip"),
                         [((1, 0), (0, 1), Z2, 0),
                          ((1, 0), (0, 1), HEX, 1),
                          ((1, 1), (1, -1), HEX, 0),
                          ((F(1, 2), 0), (F(1, 3), 3), HEX, F(11, 6))],
                         ids=("Z2-orthogonal", "A2-basis", "A2-orthogonal",
                              "A2-fractions"))
def test_inner(u: Sequence[Any], v: Sequence[Any], gram: GramForm,
               ip: F) -> None:
    assert inner(u, v, gram) == ip
    assert inner(v, u, gram) == ip


def test_dist2() -> None:
    u, v = (F(1, 2), 0), (0, F(1, 2))
    assert dist2(u, v, Z2) == F(1, 2)
    assert dist2(u, v, HEX) == F(1, 2)
    assert dist2(u, u, HEX) == 0
    assert norm2((1, 1), HEX) == 6


def test_dimension_mismatch() -> None:
    with pytest.raises(DimensionMismatchError):
        inner((1, 0, 0), (1, 0), Z2)
    with pytest.raises(DimensionMismatchError):
        GramForm([[1, 0], [0, 1, 0]])


def test_qvector() -> None:
    assert qvector(('1/2', 3, '0.25')) == (F(1, 2), F(3), F(1, 4))
    with pytest.raises(TypeError):
        qvector((0.5, 1))


@pytest.mark.parametrize("entries",
                         [[[1, 2], [3, 1]],
                          [[1, 0, 1], [0, 1, 0], [0, 0, 1]]],
                         ids=("2x2", "3x3"))
def test_not_symmetric(entries: List[List[int]]) -> None:
    with pytest.raises(NotSymmetricError):
        GramForm(entries)


@pytest.mark.parametrize(("entries", "minor_index"),
                         [([[1, 2], [2, 1]], 2),
                          ([[0, 0], [0, 1]], 1),
                          ([[-1, 0], [0, -1]], 1),
                          ([[1, 1, 1], [1, 2, 1], [1, 1, 1]], 3),
                          ([[1, 1], [1, 1]], 2)],
                         ids=("indefinite", "zero-pivot", "negative",
                              "singular-3x3", "singular-2x2"))
def test_not_positive_definite(entries: List[List[int]],
                               minor_index: int) -> None:
    with pytest.raises(NotPositiveDefiniteError) as info:
        GramForm(entries)
    assert info.value.minor_index == minor_index


def test_positive_definite_against_minors() -> None:
    rnd = random.Random(4711)
    for _ in range(300):
        n = rnd.randint(1, 4)
        m = [[F(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                m[i][j] = m[j][i] = F(rnd.randint(-3, 6))
        is_pd = all(det_oracle([row[:k] for row in m[:k]]) > 0
                    for k in range(1, n + 1))
        if is_pd:
            assert GramForm(m).det == det_oracle(m)
        else:
            with pytest.raises(NotPositiveDefiniteError):
                GramForm(m)


def test_gram_form_basics() -> None:
    g = GramForm([['1/2', '1/3'], ['1/3', 1]])
    assert g.rank == 2
    assert len(g) == 2
    assert g[0] == (F(1, 2), F(1, 3))
    assert g.det == F(7, 18)
    assert g.integral() == (((3, 2), (2, 6)), 6)
    assert not g.is_integral()
    assert HEX.is_integral()
    assert g.scaled(6) == GramForm([[3, 2], [2, 6]])
    assert g == GramForm([[F(1, 2), F(1, 3)], [F(1, 3), 1]])
    assert hash(g) == hash(GramForm([[F(1, 2), F(1, 3)], [F(1, 3), 1]]))
    assert repr(HEX) == "GramForm([[2, 1], [1, 2]])"
    assert pickle.loads(pickle.dumps(g)) == g
    with pytest.raises(ValueError):
        g.scaled(0)


def test_transformed() -> None:
    u = ((1, 100), (0, 1))
    assert Z2.transformed(u) == GramForm([[1, 100], [100, 10001]])
    assert HEX.transformed(((1, -1), (0, 1))) == GramForm([[2, -1], [-1, 2]])


@pytest.mark.parametrize("gram", [Z2, HEX,
                                  GramForm([[4, 2, 1], [2, 3, 0],
                                            [1, 0, F(5, 2)]])],
                         ids=("Z2", "A2", "3x3"))
def test_ldl(gram: GramForm) -> None:
    low, diag = ldl(gram)
    n = gram.rank
    d = tuple(tuple(diag[i] if i == j else F(0) for j in range(n))
              for i in range(n))
    assert mat_mul(mat_mul(low, d), transpose(low)) == gram.entries
    assert all(x > 0 for x in diag)


def test_determinant() -> None:
    m = [[F(0), F(1)], [F(1), F(0)]]
    assert determinant(m) == -1
    assert determinant([[F(1), F(2)], [F(2), F(4)]]) == 0
    assert HEX.det == 3


def test_solve() -> None:
    sol = solve([[1, 1], [1, -1]], [2, 0])
    assert sol == ((F(1), F(1)), ())
    assert solve([[1, 1], [2, 2]], [1, 3]) is None
    particular, kernel = solve([[1, 1, 0]], [1])
    assert particular[0] + particular[1] == 1
    assert len(kernel) == 2
    for k in kernel:
        assert k[0] + k[1] == 0


def test_rank_and_rref() -> None:
    assert rank([(1, 0), (0, 1), (1, 1)]) == 2
    assert rank([(1, 2, 3), (2, 4, 6)]) == 1
    assert rref([(2, 4), (1, 3)]) == ((F(1), F(0)), (F(0), F(1)))
    assert rref([(2, 4, 6)]) == ((F(1), F(2), F(3)),)


def test_int_inverse() -> None:
    u = ((2, 1), (1, 1))
    assert int_inverse(u) == ((1, -1), (-1, 2))
    with pytest.raises(ValueError):
        int_inverse(((2, 0), (0, 1)))


def test_flat_intersection_codim_one() -> None:
    flat = flat_intersection([bisector((1, 0), Z2)], Z2)
    assert flat is not None
    assert flat.codim == 1
    assert flat == AffineFlat((F(1, 2), 7), [(0, 1)])


def test_flat_intersection_point() -> None:
    flat = flat_intersection([bisector((1, 0), Z2), bisector((0, 1), Z2)],
                             Z2)
    assert flat is not None
    assert flat.codim == 2
    assert flat.base == (F(1, 2), F(1, 2))


def test_flat_intersection_empty() -> None:
    assert flat_intersection([bisector((1, 0), Z2), bisector((2, 0), Z2)],
                             Z2) is None


def test_flat_intersection_redundant() -> None:
    planes = [bisector(lam, Z2) for lam in ((1, 0), (0, 1), (1, 1))]
    flat = flat_intersection(planes, Z2)
    assert flat is not None
    assert flat.codim == 2
    assert flat.base == (F(1, 2), F(1, 2))


def test_affine_flat_identity() -> None:
    a = AffineFlat((0, 0, 1), [(1, 1, 0), (0, 1, 0)])
    b = AffineFlat((3, -2, 1), [(1, 0, 0), (2, 1, 0)])
    c = AffineFlat((0, 0, 2), [(1, 0, 0), (0, 1, 0)])
    assert a == b
    assert hash(a) == hash(b)
    assert a != c
    assert a.dim == 2
    assert a.codim == 1
    with pytest.raises(ValueError):
        AffineFlat((0, 0), [(1, 1), (2, 2)])


@pytest.mark.parametrize(("gram", "foot", "fnorm2"),
                         [(Z2, (F(1, 2), 0), F(1, 4)),
                          (HEX, (F(1, 2), F(-1, 4)), F(3, 8))],
                         ids=("Z2", "A2"))
def test_foot_of_origin(gram: GramForm, foot: Tuple[F, ...],
                        fnorm2: F) -> None:
    flat = AffineFlat((F(1, 2), 0), [(0, 1)])
    assert foot_of_origin(flat, gram) == (foot, fnorm2)


def test_foot_is_orthogonal() -> None:
    rnd = random.Random(17)
    gram = GramForm([[3, 1, 0], [1, 2, F(1, 2)], [0, F(1, 2), 2]])
    for _ in range(30):
        base = [F(rnd.randint(-9, 9), rnd.randint(1, 5)) for _ in range(3)]
        dirs = [[rnd.randint(-3, 3) for _ in range(3)]
                for _ in range(rnd.randint(0, 2))]
        if dirs and rank(dirs) != len(dirs):
            continue
        flat = AffineFlat(base, dirs)
        foot, fnorm2 = foot_of_origin(flat, gram)
        assert fnorm2 == norm2(foot, gram)
        for d in dirs:
            assert inner(foot, d, gram) == 0
            q = [b + d_i for b, d_i in zip(foot, d)]
            assert norm2(q, gram) >= fnorm2
