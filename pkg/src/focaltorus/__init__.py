# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright:   (c) 2026 ff. focaltorus developers
# License:     This program is free software. You can redistribute it, use it
#              and/or modify it under the terms of the 2-clause BSD license.
#              For license details please read the file LICENCE.txt provided
#              together with the source code.
# ----------------------------------------------------------------------------
# $Source$
# $Revision$


r"""Exact focal decomposition, Brillouin zones and spectra of flat tori.

Usage
=====

Defining a flat torus
---------------------

A flat torus ℝⁿ/Λ is given by the Gram matrix of a basis of its lattice Λ.
All entries are exact rationals:

    >>> from fractions import Fraction
    >>> square = make_lattice([[1, 0], [0, 1]], name='Z2')
    >>> square
    Lattice('Z2', rank=2)

Frequently used lattices are available by name:

    >>> catalog('A2').gram
    GramForm([[2, 1], [1, 2]])
    >>> catalog('E8').rank
    8

Classifying points
------------------

A tangent vector v (in coordinates relative to the lattice basis) is
classified by the number μ of B-planes through v, the number ι of B-planes
crossed by the open segment (0, v) and the Brillouin index B = 1 + ι + μ:

    >>> fc = classify(square, (Fraction(1, 2), 0))
    >>> fc.mu, fc.iota, fc.brillouin, fc.zone
    (1, 0, 2, None)
    >>> classify(square, (Fraction(3, 4), Fraction(1, 8))).zone
    2

Spectra
-------

    >>> length_spectrum(square, 2).counts()
    {Fraction(1, 1): 4, Fraction(2, 1): 4}
    >>> focal_spectrum(square, 1, max_codim=1).counts()
    {Fraction(1, 4): 4, Fraction(1, 2): 4, Fraction(1, 1): 4}

Isometry up to rescaling
------------------------

    >>> is_isometric_up_to_scale(square, make_lattice([[3, 0], [0, 3]]))
    IsometryCertificate(scale=Fraction(3, 1), transform=((1, 0), (0, 1)))
"""

from .catalog import catalog, catalog_names
from .config import Budget, RunConfig
from .exceptions import (
    BudgetExceededError, CutoffMismatchError, DimensionMismatchError,
    InconsistentCountError, LatticeError, LatticeFileError,
    NotPositiveDefiniteError, NotSymmetricError, RankMismatchError,
    RankTooLargeError, UnknownLatticeError, ZeroVectorError,
    )
from .focal import (
    BPlane, FocalClass, RadialProfile, brillouin_index, classify, in_zone,
    iota, mu, radial_profile, voronoi_relevant_vectors, zone_annulus,
    )
from .isometry import (
    IsometryCertificate, NotIsometric, is_isometric_up_to_scale,
    normalize_scale, transport_point,
    )
from .lattice import (
    BallMode, Lattice, enumerate_ball, make_lattice, minimal_norm2,
    minimal_vectors, reduce_basis, sphere_counts,
    )
from .latticefile import read_lattice, write_lattice
from .quadspace import AffineFlat, GramForm
from .spectra import (
    FocalSpectrum, LengthSpectrum, Multiplicity, SpectrumDiff, compare,
    focal_spectrum, length_spectrum, root_graph_components,
    )

# Public interface
__all__ = [
    'AffineFlat',
    'BPlane',
    'BallMode',
    'Budget',
    'BudgetExceededError',
    'CutoffMismatchError',
    'DimensionMismatchError',
    'FocalClass',
    'FocalSpectrum',
    'GramForm',
    'InconsistentCountError',
    'IsometryCertificate',
    'Lattice',
    'LatticeError',
    'LatticeFileError',
    'LengthSpectrum',
    'Multiplicity',
    'NotIsometric',
    'NotPositiveDefiniteError',
    'NotSymmetricError',
    'RadialProfile',
    'RankMismatchError',
    'RankTooLargeError',
    'RunConfig',
    'SpectrumDiff',
    'UnknownLatticeError',
    'ZeroVectorError',
    'brillouin_index',
    'catalog',
    'catalog_names',
    'classify',
    'compare',
    'enumerate_ball',
    'focal_spectrum',
    'in_zone',
    'iota',
    'is_isometric_up_to_scale',
    'length_spectrum',
    'make_lattice',
    'minimal_norm2',
    'minimal_vectors',
    'mu',
    'normalize_scale',
    'radial_profile',
    'read_lattice',
    'reduce_basis',
    'root_graph_components',
    'sphere_counts',
    'transport_point',
    'voronoi_relevant_vectors',
    'write_lattice',
    'zone_annulus',
    ]
