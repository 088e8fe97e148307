# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        spectra
# Purpose:     Length and focal spectra of flat tori
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


"""Length and focal spectra of flat tori.

The length spectrum lists the squared norms of nonzero lattice vectors up to
a cutoff, each with the number of vectors of that norm:

    >>> from focaltorus.catalog import catalog
    >>> length_spectrum(catalog('Z2'), 2).entries
    ((Fraction(1, 1), 4), (Fraction(2, 1), 4))

The focal spectrum lists the squared radii at which the sphere about the
origin is tangent to a B-plane or to an intersection flat of several
B-planes, i.e. the critical values of the distance from the origin on the
B-plane arrangement:

    >>> spectrum = focal_spectrum(catalog('Z2'), Fraction(1, 2), 2)
    >>> [(str(e.rho2), e.multiplicity) for e in spectrum.entries]
    [('1/4', 4), ('1/2', 8)]

Spectra are compared entrywise:

    >>> compare(length_spectrum(catalog('Z2'), 2),
    ...         length_spectrum(catalog('A2'), 2)).first_discrepancy
    (Fraction(1, 1), 4, 0)
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import (
    Any, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union,
    )

from .config import Budget
from .exceptions import CutoffMismatchError, InconsistentCountError
from .focal import BPlane
from .lattice import (
    BallMode, Lattice, LatticePointT, enumerate_ball, minimal_vectors,
    sphere_counts,
    )
from .quadspace import (
    AffineFlat, flat_intersection, foot_of_origin, mat_vec, rank,
    )
from .utils import ScalarLikeT, as_scalar, parse_scalar

# Public interface
__all__ = [
    'FocalEntry',
    'FocalSpectrum',
    'LengthSpectrum',
    'Multiplicity',
    'SpectrumDiff',
    'Verdict',
    'compare',
    'focal_spectrum',
    'length_spectrum',
    'root_graph_components',
    'spectrum_from_json',
    ]

logger = logging.getLogger(__name__)

#: Header shared by both spectra; length spectra put the norm in rho2
CSV_HEADER = ('rho2_num', 'rho2_den', 'multiplicity')


class Multiplicity(Enum):
    """How focal spectrum entries are counted."""

    FLATS = 'flats'         # distinct intersection flats (point sets)
    SUBSETS = 'subsets'     # independent generating subsets of planes


class Verdict(Enum):
    """Result of a spectrum comparison."""

    EQUAL = 'equal-up-to-cutoff'
    DIFFER = 'differ'


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


@dataclass(frozen=True)
class LengthSpectrum:
    """Squared norms of nonzero lattice vectors with their counts."""

    cutoff2: Fraction
    entries: Tuple[Tuple[Fraction, int], ...]

    kind = 'length'

    def counts(self) -> Dict[Fraction, int]:
        """Return the entries as dict norm² → count."""
        return dict(self.entries)

    def rescaled(self, factor: ScalarLikeT) -> LengthSpectrum:
        """Return the spectrum of the lattice with Gram scaled by `factor`."""
        c = as_scalar(factor)
        if c <= 0:
            raise ValueError("Scale factor must be > 0.")
        return LengthSpectrum(self.cutoff2 * c,
                              tuple((c * n, m) for n, m in self.entries))

    def to_csv(self) -> str:
        """Return the spectrum as CSV text."""
        return _csv_text(CSV_HEADER,
                         [(n.numerator, n.denominator, m)
                          for n, m in self.entries])

    def as_dict(self) -> Dict[str, Any]:
        """Return the spectrum as JSON-compatible dict."""
        return {
            'kind': self.kind,
            'cutoff2': str(self.cutoff2),
            'entries': [{'norm2': str(n), 'multiplicity': m}
                        for n, m in self.entries],
            }

    def to_json(self) -> str:
        """Return the spectrum as JSON text."""
        return json.dumps(self.as_dict(), indent=2)


class FocalEntry(NamedTuple):
    """Entry of a focal spectrum."""

    rho2: Fraction
    multiplicity: int
    breakdown: Tuple[Tuple[int, int], ...]     # (codim, count), ascending


@dataclass(frozen=True)
class FocalSpectrum:
    """Critical squared radii of the B-plane arrangement up to `max_codim`."""

    cutoff2: Fraction
    max_codim: int
    entries: Tuple[FocalEntry, ...]
    multiplicity: Multiplicity = Multiplicity.FLATS

    kind = 'focal'

    def counts(self) -> Dict[Fraction, int]:
        """Return the entries as dict rho² → multiplicity."""
        return {e.rho2: e.multiplicity for e in self.entries}

    def codim_part(self, codim: int) -> Dict[Fraction, int]:
        """Return the entries contributed by flats of codimension `codim`."""
        res = {}
        for entry in self.entries:
            count = dict(entry.breakdown).get(codim)
            if count:
                res[entry.rho2] = count
        return res

    def rescaled(self, factor: ScalarLikeT) -> FocalSpectrum:
        """Return the spectrum of the lattice with Gram scaled by `factor`."""
        c = as_scalar(factor)
        if c <= 0:
            raise ValueError("Scale factor must be > 0.")
        return FocalSpectrum(self.cutoff2 * c, self.max_codim,
                             tuple(e._replace(rho2=c * e.rho2)
                                   for e in self.entries),
                             self.multiplicity)

    def to_csv(self, with_codim: bool = False) -> str:
        """Return the spectrum as CSV text.

        The optional codim column holds `codim:count` pairs separated by
        blanks.
        """
        header = CSV_HEADER + (('codim',) if with_codim else ())
        rows = []
        for e in self.entries:
            row: List[Any] = [e.rho2.numerator, e.rho2.denominator,
                              e.multiplicity]
            if with_codim:
                row.append(" ".join(f"{c}:{m}" for c, m in e.breakdown))
            rows.append(row)
        return _csv_text(header, rows)

    def as_dict(self) -> Dict[str, Any]:
        """Return the spectrum as JSON-compatible dict."""
        return {
            'kind': self.kind,
            'cutoff2': str(self.cutoff2),
            'max_codim': self.max_codim,
            'multiplicity_mode': self.multiplicity.value,
            'entries': [{'rho2': str(e.rho2),
                         'multiplicity': e.multiplicity,
                         'codim': {str(c): m for c, m in e.breakdown}}
                        for e in self.entries],
            }

    def to_json(self) -> str:
        """Return the spectrum as JSON text."""
        return json.dumps(self.as_dict(), indent=2)


SpectrumT = Union[LengthSpectrum, FocalSpectrum]


def spectrum_from_json(text: str) -> SpectrumT:
    """Return the spectrum encoded in `text` (as written by `to_json`).

    Raises:
        ValueError: `text` is not a valid spectrum encoding
    """
    try:
        data = json.loads(text)
        kind = data['kind']
        cutoff2 = parse_scalar(data['cutoff2'])
        if kind == LengthSpectrum.kind:
            return LengthSpectrum(
                cutoff2,
                tuple((parse_scalar(e['norm2']), int(e['multiplicity']))
                      for e in data['entries']))
        if kind == FocalSpectrum.kind:
            return FocalSpectrum(
                cutoff2, int(data['max_codim']),
                tuple(FocalEntry(parse_scalar(e['rho2']),
                                 int(e['multiplicity']),
                                 tuple(sorted((int(c), int(m)) for c, m
                                              in e['codim'].items())))
                      for e in data['entries']),
                Multiplicity(data['multiplicity_mode']))
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"Invalid spectrum encoding: {exc}") from None
    raise ValueError(f"Unknown spectrum kind '{kind}'.")


def length_spectrum(lattice: Lattice, cutoff2: ScalarLikeT, *,
                    budget: Optional[Budget] = None,
                    threads: int = 1) -> LengthSpectrum:
    """Return the length spectrum of `lattice` up to `cutoff2`."""
    cutoff = as_scalar(cutoff2)
    if cutoff <= 0:
        raise ValueError("'cutoff2' must be > 0.")
    counts = sphere_counts(lattice, cutoff, budget=budget, threads=threads)
    return LengthSpectrum(cutoff,
                          tuple((n, m) for n, m in counts.items() if n > 0))


class _Candidates:
    """Candidate planes of the focal spectrum with exact integer products."""

    def __init__(self, lattice: Lattice, lams: Sequence[LatticePointT]):
        self.lattice = lattice
        self.lams = list(lams)
        self.planes = [BPlane(lam, lattice.gram) for lam in self.lams]
        g_int, self.g_den = lattice.gram.integral()
        self.images = [mat_vec(g_int, lam) for lam in self.lams]
        self.norms = [self.product(i, i) for i in range(len(self.lams))]

    def product(self, i: int, j: int) -> int:
        """g_den · ⟨λ_i, λ_j⟩"""
        return sum(a * b for a, b in zip(self.lams[i], self.images[j]))


def _flat_key(flat: AffineFlat) -> Any:
    return flat.canonical_key


def _contains(plane: BPlane, flat: AffineFlat) -> bool:
    if plane.value_at(flat.base) != 0:
        return False
    return all(sum(a * b for a, b in zip(plane.normal, d)) == 0
               for d in flat.directions)


def focal_spectrum(lattice: Lattice, cutoff2: ScalarLikeT,
                   max_codim: int = 2,
                   multiplicity: Union[Multiplicity, str] = Multiplicity.FLATS,
                   *, budget: Optional[Budget] = None,
                   threads: int = 1) -> FocalSpectrum:
    """Return the focal spectrum of `lattice` up to `cutoff2`.

    Every nonempty intersection flat of at most `max_codim` independent
    B-planes whose foot has squared norm rho² ≤ `cutoff2` contributes rho².
    A flat lies inside each of its planes, so its foot is at least as far
    from the origin as the foot of each plane, ⟨λ, λ⟩ / 4. Hence only planes
    with ⟨λ, λ⟩ ≤ 4·cutoff2 can contribute.

    Args:
        lattice: the lattice
        cutoff2: squared radius cutoff (> 0)
        max_codim: maximal codimension of flats (1 ≤ max_codim ≤ rank)
        multiplicity: FLATS counts distinct flats, SUBSETS counts the
            independent subsets of planes generating each flat
        budget: resource budget (counts enumerated points and examined plane
            subsets)
        threads: worker processes for the enumeration of candidate planes

    Raises:
        BudgetExceededError: the computation exceeds `budget`
    """
    cutoff = as_scalar(cutoff2)
    if cutoff <= 0:
        raise ValueError("'cutoff2' must be > 0.")
    if not 1 <= max_codim <= lattice.rank:
        raise ValueError(f"'max_codim' must be in [1, {lattice.rank}].")
    mode = Multiplicity(multiplicity)
    budget = budget or Budget()
    tracker = budget.start()

    lams = [lam for lam in enumerate_ball(lattice, (0,) * lattice.rank,
                                          4 * cutoff, BallMode.CLOSED,
                                          budget=budget, threads=threads)
            if any(lam)]
    cands = _Candidates(lattice, lams)
    n_cands = len(lams)
    logger.info("Focal spectrum: %d candidate planes.", n_cands)

    # flats by codim: key → (flat, rho2)
    found: Dict[int, Dict[Any, Tuple[AffineFlat, Fraction]]] = {1: {}}
    for idx, plane in enumerate(cands.planes):
        flat = flat_intersection([plane], lattice.gram)
        assert flat is not None
        rho2 = Fraction(cands.norms[idx], 4 * cands.g_den)
        found[1][_flat_key(flat)] = (flat, rho2)

    if max_codim >= 2:
        # foot² of V_λ ∩ V_μ = ab(a + b − 2c) / (4g(ab − c²))
        p, q = cutoff.numerator, cutoff.denominator
        g = cands.g_den
        pairs: Dict[Any, Tuple[AffineFlat, Fraction]] = {}
        for i, j in combinations(range(n_cands), 2):
            tracker.charge(1, "examined plane subsets")
            a = cands.norms[i]
            b = cands.norms[j]
            c = cands.product(i, j)
            det = a * b - c * c
            if det <= 0:
                continue
            num = a * b * (a + b - 2 * c)
            if num * q > 4 * g * det * p:
                continue
            flat = flat_intersection([cands.planes[i], cands.planes[j]],
                                     lattice.gram)
            assert flat is not None
            key = _flat_key(flat)
            if key not in pairs:
                pairs[key] = (flat, Fraction(num, 4 * g * det))
        found[2] = pairs

    for codim in range(3, max_codim + 1):
        higher: Dict[Any, Tuple[AffineFlat, Fraction]] = {}
        for flat, _ in found[codim - 1].values():
            for plane in cands.planes:
                tracker.charge(1, "examined plane subsets")
                if _contains(plane, flat):
                    continue
                sub = _intersect(flat, plane, lattice)
                if sub is None or sub.codim != codim:
                    continue
                key = _flat_key(sub)
                if key in higher:
                    continue
                _, rho2 = foot_of_origin(sub, lattice.gram)
                if rho2 <= cutoff:
                    higher[key] = (sub, rho2)
        found[codim] = higher
        logger.debug("Focal spectrum: %d flats of codim %d.", len(higher),
                     codim)

    tally: Dict[Fraction, Dict[int, int]] = {}
    for codim, flats in found.items():
        for flat, rho2 in flats.values():
            if mode is Multiplicity.FLATS or codim == 1:
                count = 1
            else:
                count = _generating_subsets(flat, cands, tracker)
            per_codim = tally.setdefault(rho2, {})
            per_codim[codim] = per_codim.get(codim, 0) + count
    entries = []
    for rho2 in sorted(tally):
        breakdown = tuple(sorted(tally[rho2].items()))
        entries.append(FocalEntry(rho2, sum(m for _, m in breakdown),
                                  breakdown))
    return FocalSpectrum(cutoff, max_codim, tuple(entries), mode)


def _intersect(flat: AffineFlat, plane: BPlane, lattice: Lattice) \
        -> Optional[AffineFlat]:
    """Return flat ∩ plane, or None if empty."""
    # substitute x = base + Σ t_i d_i into the plane's equation
    dirs = flat.directions
    coeffs = [sum(a * b for a, b in zip(plane.normal, d)) for d in dirs]
    rhs = -plane.value_at(flat.base)
    pivot = next((i for i, c in enumerate(coeffs) if c != 0), None)
    if pivot is None:
        return None if rhs != 0 else flat
    t = rhs / coeffs[pivot]
    base = tuple(b + t * x for b, x in zip(flat.base, dirs[pivot]))
    new_dirs = []
    for i, d in enumerate(dirs):
        if i == pivot:
            continue
        f = coeffs[i] / coeffs[pivot]
        new_dirs.append(tuple(x - f * y for x, y in zip(d, dirs[pivot])))
    return AffineFlat(base, new_dirs, ambient_rank=lattice.rank)


def _generating_subsets(flat: AffineFlat, cands: _Candidates,
                        tracker: Any) -> int:
    incident = [plane.vector for plane in cands.planes
                if _contains(plane, flat)]
    count = 0
    for subset in combinations(incident, flat.codim):
        tracker.charge(1, "examined plane subsets")
        if rank(subset) == flat.codim:
            count += 1
    if count == 0:
        raise InconsistentCountError(f"{flat!r} has no generating subset.")
    return count


@dataclass(frozen=True)
class SpectrumDiff:
    """Result of comparing two spectra.

    `first_discrepancy` holds the smallest squared radius where the spectra
    differ and the multiplicities on the left and right side.
    """

    verdict: Verdict
    first_discrepancy: Optional[Tuple[Fraction, int, int]] = None

    def __post_init__(self) -> None:
        if (self.verdict is Verdict.DIFFER) != \
                (self.first_discrepancy is not None):
            raise ValueError("A discrepancy must be given iff the spectra "
                             "differ.")

    @property
    def equal(self) -> bool:
        """True if the spectra are equal up to the cutoff."""
        return self.verdict is Verdict.EQUAL

    def as_dict(self) -> Dict[str, Any]:
        """Return the result as JSON-compatible dict."""
        res: Dict[str, Any] = {'verdict': self.verdict.value}
        if self.first_discrepancy is not None:
            value, left, right = self.first_discrepancy
            res['first_discrepancy'] = {'value': str(value), 'left': left,
                                        'right': right}
        return res


def compare(left: SpectrumT, right: SpectrumT) -> SpectrumDiff:
    """Compare two spectra entrywise.

    Raises:
        TypeError: spectra of different kind
        CutoffMismatchError: spectra computed with different parameters
    """
    if type(left) is not type(right):
        raise TypeError("Can't compare a length with a focal spectrum.")
    if left.cutoff2 != right.cutoff2:
        raise CutoffMismatchError("Cutoffs differ: %s != %s.",
                                  left.cutoff2, right.cutoff2)
    if isinstance(left, FocalSpectrum):
        assert isinstance(right, FocalSpectrum)
        if left.max_codim != right.max_codim:
            raise CutoffMismatchError("Maximal codimensions differ: "
                                      "%s != %s.",
                                      left.max_codim, right.max_codim)
        if left.multiplicity is not right.multiplicity:
            raise CutoffMismatchError("Multiplicity conventions differ: "
                                      "%s != %s.", left.multiplicity.value,
                                      right.multiplicity.value)
    lcounts = left.counts()
    rcounts = right.counts()
    for value in sorted(set(lcounts) | set(rcounts)):
        lm = lcounts.get(value, 0)
        rm = rcounts.get(value, 0)
        if lm != rm:
            return SpectrumDiff(Verdict.DIFFER, (value, lm, rm))
    return SpectrumDiff(Verdict.EQUAL)


def root_graph_components(lattice: Lattice, *,
                          budget: Optional[Budget] = None) -> int:
    """Return the number of components of the graph of minimal vectors.

    Vertices are the minimal vectors modulo ±; two vertices are adjacent
    if their inner product is nonzero.
    """
    g_int, _ = lattice.gram.integral()
    reps = sorted({max(v, tuple(-x for x in v))
                   for v in minimal_vectors(lattice, budget=budget)})
    images = [mat_vec(g_int, r) for r in reps]
    parent = list(range(len(reps)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in combinations(range(len(reps)), 2):
        if sum(a * b for a, b in zip(reps[i], images[j])) != 0:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    return len({find(i) for i in range(len(reps))})
