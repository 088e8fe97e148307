# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Name:        cli
# Purpose:     Command line interface
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


"""Focal decomposition, Brillouin zones and spectra of flat tori.

Lattices are given as path of a lattice file or as `catalog:NAME`.

Exit codes: 0 success (compare: equivalent), 1 compare: distinguished,
2 compare: inconclusive, 3 error.
"""

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import (
    Any, Callable, Dict, List, NoReturn, Optional, Sequence, Tuple,
    )

from .catalog import catalog
from .config import (
    DFLT_MAX_POINTS, DFLT_TIME_LIMIT, Budget, RunConfig, default_threads,
    )
from .exceptions import BudgetExceededError, LatticeError
from .focal import (
    classify, farey_directions, radial_profile, voronoi_relevant_vectors,
    zone_annulus,
    )
from .isometry import (
    MAX_EXACT_RANK, IsometryCertificate, is_isometric_up_to_scale,
    normalize_scale,
    )
from .lattice import Lattice, minimal_norm2, minimal_vectors, sphere_counts
from .latticefile import read_lattice
from .render import render_zone_fan
from .spectra import (
    FocalSpectrum, LengthSpectrum, Multiplicity, compare, focal_spectrum,
    length_spectrum, root_graph_components,
    )
from .utils import fixed_sqrt, parse_scalar

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DISTINGUISHED = 1
EXIT_INCONCLUSIVE = 2
EXIT_ERROR = 3

CATALOG_PREFIX = 'catalog:'

#: Output formats per subcommand (first one is the default)
FORMATS = {
    'info': ('text', 'json'),
    'classify': ('text', 'json'),
    'zones': ('json', 'text', 'csv', 'svg'),
    'spectra': ('csv', 'text', 'json'),
    'compare': ('text', 'json'),
    'witt': ('text', 'json'),
    }

WITT_PAIR = ('E8xE8', 'D16plus')


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser exiting with EXIT_ERROR on usage errors."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def scalar(s: str) -> Fraction:
    """Parse an exact rational command line argument."""
    return parse_scalar(s)


def positive_int(s: str) -> int:
    """Parse a positive integer command line argument."""
    value = int(s)
    if value < 1:
        raise ValueError(s)
    return value


def load_lattice(source: Optional[str], catalog_name: Optional[str] = None) \
        -> Lattice:
    """Return the lattice given by a file path or `catalog:NAME`."""
    if catalog_name is not None:
        if source is not None:
            raise LatticeError("Give either a lattice or --catalog, not "
                               "both.")
        return catalog(catalog_name)
    if source is None:
        raise LatticeError("No lattice given.")
    if source.startswith(CATALOG_PREFIX):
        return catalog(source[len(CATALOG_PREFIX):])
    return read_lattice(source)


def _label(lattice: Lattice) -> str:
    return lattice.name or 'unnamed'


def _point_str(point: Sequence[Any]) -> str:
    return "(" + ", ".join(str(x) for x in point) + ")"


def _sqrt_str(value: Fraction) -> str:
    return str(fixed_sqrt(value))


def _dump_json(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


# subcommands

def cmd_info(args: argparse.Namespace, config: RunConfig) -> Tuple[str, int]:
    """Report basic data of a lattice."""
    lattice = load_lattice(args.lattice, args.catalog)
    budget = config.budget
    m = minimal_norm2(lattice, budget=budget)
    cutoff = args.cutoff2 if args.cutoff2 is not None else 2 * m
    counts = sphere_counts(lattice, cutoff, budget=budget,
                           threads=config.threads)
    n_min = len(minimal_vectors(lattice, budget=budget))
    n_relevant = (len(voronoi_relevant_vectors(lattice, budget=budget))
                  if lattice.rank <= MAX_EXACT_RANK else None)
    data = {
        'name': lattice.name,
        'rank': lattice.rank,
        'gram': [[str(x) for x in row] for row in lattice.gram],
        'det': str(lattice.det),
        'minimal_norm2': str(m),
        'minimal_vectors': n_min,
        'voronoi_relevant_vectors': n_relevant,
        'cutoff2': str(cutoff),
        'sphere_counts': [{'norm2': str(n), 'count': c}
                          for n, c in counts.items()],
        }
    if config.output_format == 'json':
        return _dump_json(data), EXIT_OK
    lines = [
        f"lattice:          {_label(lattice)}",
        f"rank:             {lattice.rank}",
        "gram:",
        *("  " + " ".join(str(x) for x in row) for row in lattice.gram),
        f"det:              {lattice.det}",
        f"minimal norm2:    {m}",
        f"minimal vectors:  {n_min}",
        ]
    if n_relevant is not None:
        lines.append(f"voronoi-relevant: {n_relevant}")
    lines.append(f"sphere counts up to norm2 {cutoff}:")
    lines.extend(f"  {n}: {c}" for n, c in counts.items())
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_classify(args: argparse.Namespace, config: RunConfig) \
        -> Tuple[str, int]:
    """Classify a point of the tangent space."""
    lattice = load_lattice(args.lattice, args.catalog)
    point = tuple(args.point)
    fc = classify(lattice, point, verify=args.verify, budget=config.budget)
    if config.output_format == 'json':
        data = {'lattice': lattice.name,
                'point': [str(x) for x in point]}
        data.update(fc.as_dict())
        return _dump_json(data), EXIT_OK
    zone = (f"boundary (nu {fc.nu})" if fc.is_boundary
            else f"interior of zone {fc.zone}")
    lines = [
        f"point:     {_point_str(point)}",
        f"mu:        {fc.mu}",
        f"iota:      {fc.iota}",
        f"brillouin: {fc.brillouin}",
        f"sigma:     {fc.sigma_index}",
        f"zone:      {zone}",
        f"nu:        {fc.nu}",
        ]
    if fc.planes:
        lines.append("incident: " + " ".join(_point_str(p.vector)
                                             for p in fc.planes))
    return "\n".join(lines) + "\n", EXIT_OK


def _directions(count: int) -> List[Tuple[Fraction, ...]]:
    order = 1
    dirs = farey_directions(order)
    while len(dirs) < count:
        order += 1
        dirs = farey_directions(order)
    return dirs


def cmd_zones(args: argparse.Namespace, config: RunConfig) \
        -> Tuple[str, int]:
    """Bound and render the Brillouin zones of a rank 2 lattice."""
    lattice = load_lattice(args.lattice, args.catalog)
    if lattice.rank != 2:
        raise LatticeError(f"Zones need a rank 2 lattice, got rank "
                           f"{lattice.rank}.")
    dirs = _directions(args.directions)
    budget = config.budget
    rows = []
    for k in range(1, args.k_max + 1):
        r2_min, r2_max = zone_annulus(lattice, k, dirs, budget=budget,
                                      threads=config.threads)
        rows.append((k, r2_min, r2_max))
    svg = None
    if args.svg is not None or config.output_format == 'svg':
        profiles = [radial_profile(lattice, u, args.k_max, budget=budget)
                    for u in dirs]
        svg = render_zone_fan(lattice, profiles, rows, args.k_max)
        if args.svg is not None:
            Path(args.svg).write_text(svg, encoding='utf-8')
    fmt = config.output_format
    if fmt == 'svg':
        assert svg is not None
        return svg, EXIT_OK
    if fmt == 'json':
        return _dump_json({
            'lattice': lattice.name,
            'directions': len(dirs),
            'annuli': [{'k': k, 'r2_min': str(lo), 'r2_max': str(hi)}
                       for k, lo, hi in rows],
            }), EXIT_OK
    if fmt == 'csv':
        lines = ["k,r2_min,r2_max"]
        lines.extend(f"{k},{lo},{hi}" for k, lo, hi in rows)
        return "\n".join(lines) + "\n", EXIT_OK
    lines = [f"zones of {_label(lattice)} over {len(dirs)} directions:"]
    lines.extend(f"  k={k}: r2 in [{lo}, {hi}]  "
                 f"(r in [{_sqrt_str(lo)}, {_sqrt_str(hi)}])"
                 for k, lo, hi in rows)
    return "\n".join(lines) + "\n", EXIT_OK


def _spectrum_text(spectrum: Any) -> str:
    if isinstance(spectrum, LengthSpectrum):
        lines = [f"length spectrum up to norm2 {spectrum.cutoff2}:"]
        lines.extend(f"  {n}: {m}" for n, m in spectrum.entries)
    else:
        lines = [f"focal spectrum up to rho2 {spectrum.cutoff2} "
                 f"(codim <= {spectrum.max_codim}, "
                 f"{spectrum.multiplicity.value}):"]
        lines.extend(f"  {e.rho2} (rho {_sqrt_str(e.rho2)}): "
                     f"{e.multiplicity}  ["
                     + " ".join(f"{c}:{m}" for c, m in e.breakdown) + "]"
                     for e in spectrum.entries)
    return "\n".join(lines) + "\n"


def cmd_spectra(args: argparse.Namespace, config: RunConfig) \
        -> Tuple[str, int]:
    """Compute the length or focal spectrum of a lattice."""
    lattice = load_lattice(args.lattice, args.catalog)
    spectrum: Any
    if args.kind == 'length':
        spectrum = length_spectrum(lattice, args.cutoff2,
                                   budget=config.budget,
                                   threads=config.threads)
    else:
        spectrum = focal_spectrum(lattice, args.cutoff2, args.max_codim,
                                  Multiplicity(args.multiplicity),
                                  budget=config.budget,
                                  threads=config.threads)
    fmt = config.output_format
    if fmt == 'json':
        return spectrum.to_json() + "\n", EXIT_OK
    if fmt == 'csv':
        if isinstance(spectrum, FocalSpectrum):
            return spectrum.to_csv(with_codim=args.codim_column), EXIT_OK
        return spectrum.to_csv(), EXIT_OK
    return _spectrum_text(spectrum), EXIT_OK


def _invariant_steps(first: Lattice, scale: Fraction,
                     args: argparse.Namespace, config: RunConfig) \
        -> List[Tuple[str, Callable[[Lattice], Any], bool]]:
    budget = config.budget
    threads = config.threads
    # cutoffs refer to the norms of `first`, spectra to the normalized forms
    length_cutoff = args.cutoff2 / scale
    focal_cutoff = (args.focal_cutoff2 if args.focal_cutoff2 is not None
                    else args.cutoff2 / 4) / scale
    steps: List[Tuple[str, Callable[[Lattice], Any], bool]] = [
        ('length_spectrum',
         lambda lat: length_spectrum(lat, length_cutoff, budget=budget,
                                     threads=threads), True),
        ('root_graph_components',
         lambda lat: root_graph_components(lat, budget=budget), False),
        ]
    if first.rank <= MAX_EXACT_RANK:
        steps.append(('voronoi_relevant_vectors',
                      lambda lat: len(voronoi_relevant_vectors(
                          lat, budget=budget)), False))
    steps.append(('focal_spectrum',
                  lambda lat: focal_spectrum(lat, focal_cutoff,
                                             args.max_codim, budget=budget,
                                             threads=threads), True))
    return steps


def cmd_compare(args: argparse.Namespace, config: RunConfig) \
        -> Tuple[str, int]:
    """Decide whether two flat tori are equivalent up to rescaling."""
    first = load_lattice(args.first)
    second = load_lattice(args.second)
    budget = config.budget
    report: Dict[str, Any] = {
        'first': first.name,
        'second': second.name,
        'rank': first.rank,
        }
    isometry: Any = None
    if first.rank == second.rank and first.rank <= MAX_EXACT_RANK:
        isometry = is_isometric_up_to_scale(first, second, budget=budget)
        report['isometry'] = {
            'isometric': isinstance(isometry, IsometryCertificate),
            **isometry.as_dict()}
    elif first.rank != second.rank:
        # raises RankMismatchError
        is_isometric_up_to_scale(first, second)
    norm1, s1 = normalize_scale(first, budget=budget)
    norm2, s2 = normalize_scale(second, budget=budget)
    report['scales'] = [str(s1), str(s2)]
    invariants = []
    distinguishing: Optional[str] = None
    for name, func, is_spectrum in _invariant_steps(first, s1, args, config):
        logger.info("Comparing %s.", name)
        try:
            left, right = func(norm1), func(norm2)
        except BudgetExceededError as exc:
            invariants.append({'invariant': name, 'error': str(exc)})
            continue
        if is_spectrum:
            diff = compare(left, right)
            entry = {'invariant': name, **diff.as_dict()}
            equal = diff.equal
        else:
            equal = left == right
            entry = {'invariant': name, 'left': left, 'right': right,
                     'verdict': 'equal' if equal else 'differ'}
        invariants.append(entry)
        if not equal:
            distinguishing = name
            break
    report['invariants'] = invariants
    if isometry is not None:
        if isinstance(isometry, IsometryCertificate):
            verdict, code = 'equivalent', EXIT_OK
        else:
            verdict, code = 'distinguished', EXIT_DISTINGUISHED
            distinguishing = isometry.invariant
    elif distinguishing is not None:
        verdict, code = 'distinguished', EXIT_DISTINGUISHED
    else:
        verdict, code = 'inconclusive', EXIT_INCONCLUSIVE
    report['verdict'] = verdict
    report['distinguishing_invariant'] = distinguishing
    if config.output_format == 'json':
        return _dump_json(report), code
    lines = [f"compare {_label(first)} vs {_label(second)} "
             f"(rank {first.rank}, scales {s1} and {s2})"]
    if isinstance(isometry, IsometryCertificate):
        lines.append(f"  certificate: scale {isometry.scale}, "
                     f"U = {[list(row) for row in isometry.transform]}")
    elif isometry is not None:
        lines.append(f"  not isometric: {isometry.invariant} "
                     f"({isometry.left} vs {isometry.right})")
    for entry in invariants:
        if 'error' in entry:
            lines.append(f"  {entry['invariant']}: {entry['error']}")
        elif 'first_discrepancy' in entry:
            disc = entry['first_discrepancy']
            lines.append(f"  {entry['invariant']}: differ at "
                         f"{disc['value']} ({disc['left']} vs "
                         f"{disc['right']})")
        elif 'left' in entry:
            lines.append(f"  {entry['invariant']}: {entry['left']} vs "
                         f"{entry['right']}")
        else:
            lines.append(f"  {entry['invariant']}: {entry['verdict']}")
    lines.append(f"verdict: {verdict}"
                 + (f" by {distinguishing}" if distinguishing else ""))
    return "\n".join(lines) + "\n", code


def _run_phase(phases: Dict[str, Any], name: str,
               func: Callable[[], Dict[str, Any]]) -> None:
    logger.info("Witt experiment: phase %s.", name)
    try:
        phases[name] = func()
    except BudgetExceededError as exc:
        logger.warning("Phase %s: %s", name, exc)
        phases[name] = {'error': str(exc)}


def cmd_witt(args: argparse.Namespace, config: RunConfig) \
        -> Tuple[str, int]:
    """Compare the two even unimodular lattices of rank 16."""
    left, right = (catalog(name) for name in WITT_PAIR)
    budget = config.budget
    threads = config.threads
    phases: Dict[str, Any] = {}

    def spectra_phase(kind: str) -> Dict[str, Any]:
        spectra: List[Any] = []
        for lat in (left, right):
            if kind == 'length':
                spectra.append(length_spectrum(lat, args.cutoff2,
                                               budget=budget,
                                               threads=threads))
            else:
                spectra.append(focal_spectrum(lat, args.cutoff2,
                                              args.max_codim, budget=budget,
                                              threads=threads))
        return {'spectra': [s.as_dict() for s in spectra],
                **compare(*spectra).as_dict()}

    _run_phase(phases, 'length_spectrum', lambda: spectra_phase('length'))
    _run_phase(phases, 'root_graph_components',
               lambda: {'left': root_graph_components(left, budget=budget),
                        'right': root_graph_components(right,
                                                       budget=budget)})
    _run_phase(phases, 'focal_spectrum', lambda: spectra_phase('focal'))
    report = {'lattices': list(WITT_PAIR), 'cutoff2': str(args.cutoff2),
              'max_codim': args.max_codim, 'phases': phases}
    if config.output_format == 'json':
        return _dump_json(report), EXIT_OK
    lines = [f"Witt pair {WITT_PAIR[0]} / {WITT_PAIR[1]}, cutoff2 "
             f"{args.cutoff2}, max codim {args.max_codim}"]
    for name, phase in phases.items():
        if 'error' in phase:
            lines.append(f"{name}: {phase['error']}")
        elif name == 'root_graph_components':
            lines.append(f"{name}: {phase['left']} vs {phase['right']}")
        else:
            lines.append(f"{name}: {phase['verdict']}")
            key = 'norm2' if name == 'length_spectrum' else 'rho2'
            for entry in phase['spectra'][0]['entries']:
                lines.append(f"  {entry[key]}: {entry['multiplicity']}")
            if 'first_discrepancy' in phase:
                disc = phase['first_discrepancy']
                lines.append(f"  first discrepancy at {disc['value']}: "
                             f"{disc['left']} vs {disc['right']}")
    return "\n".join(lines) + "\n", EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig],
                             Tuple[str, int]]] = {
    'info': cmd_info,
    'classify': cmd_classify,
    'zones': cmd_zones,
    'spectra': cmd_spectra,
    'compare': cmd_compare,
    'witt': cmd_witt,
    }


def _add_lattice_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('lattice', nargs='?',
                        help="lattice file or catalog:NAME")
    parser.add_argument('--catalog', metavar='NAME',
                        help="use the named catalog lattice")


def _add_format(parser: argparse.ArgumentParser, command: str) -> None:
    choices = FORMATS[command]
    parser.add_argument('--format', choices=choices, default=choices[0],
                        help=f"output format (default: {choices[0]})")


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of the command line interface."""
    parser = _ArgumentParser(prog='focaltorus', description=__doc__,
                             formatter_class=argparse.
                             RawDescriptionHelpFormatter)
    parser.add_argument('--threads', type=positive_int, default=None,
                        help="worker processes (default: $FOCAL_THREADS or "
                             "number of cores)")
    parser.add_argument('--max-points', type=positive_int,
                        default=DFLT_MAX_POINTS,
                        help="budget of enumerated points / examined plane "
                             "subsets (default: %(default)s)")
    parser.add_argument('--time-limit', type=float, default=DFLT_TIME_LIMIT,
                        help="soft cap on seconds (default: %(default)s)")
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="log progress to stderr (-vv for debug)")
    sub = parser.add_subparsers(dest='command', required=True)

    info = sub.add_parser('info', help="report basic lattice data")
    _add_lattice_source(info)
    _add_format(info, 'info')
    info.add_argument('--cutoff2', type=scalar, default=None,
                      help="cutoff of sphere counts "
                           "(default: twice the minimal norm)")

    cls = sub.add_parser('classify', help="classify a point")
    _add_lattice_source(cls)
    _add_format(cls, 'classify')
    cls.add_argument('--point', type=scalar, nargs='+', required=True,
                     help="coordinates relative to the lattice basis")
    cls.add_argument('--verify', dest='verify', action='store_true',
                     default=True,
                     help="count iota by the strict ball and by crossing "
                          "the segment; both counts must agree (default)")
    cls.add_argument('--no-verify', dest='verify', action='store_false',
                     help="count iota by the strict ball only")

    zones = sub.add_parser('zones', help="bound and render zones (rank 2)")
    _add_lattice_source(zones)
    _add_format(zones, 'zones')
    zones.add_argument('--k-max', type=positive_int, default=3,
                       help="number of zones (default: %(default)s)")
    zones.add_argument('--directions', type=positive_int, default=64,
                       help="minimal number of sampled directions "
                            "(default: %(default)s)")
    zones.add_argument('--svg', metavar='PATH', default=None,
                       help="write the zone fan to PATH")

    spectra = sub.add_parser('spectra', help="length or focal spectrum")
    _add_lattice_source(spectra)
    _add_format(spectra, 'spectra')
    spectra.add_argument('--kind', choices=('length', 'focal'),
                         default='length')
    spectra.add_argument('--cutoff2', type=scalar, required=True,
                         help="squared radius cutoff")
    spectra.add_argument('--max-codim', type=positive_int, default=2,
                         help="maximal codimension of flats "
                              "(default: %(default)s)")
    spectra.add_argument('--multiplicity',
                         choices=[m.value for m in Multiplicity],
                         default=Multiplicity.FLATS.value)
    spectra.add_argument('--codim-column', action='store_true',
                         help="add the codim breakdown to CSV output")

    cmp = sub.add_parser('compare', help="compare two flat tori")
    cmp.add_argument('first', help="lattice file or catalog:NAME")
    cmp.add_argument('second', help="lattice file or catalog:NAME")
    _add_format(cmp, 'compare')
    cmp.add_argument('--cutoff2', type=scalar, default=Fraction(4),
                     help="cutoff of the length spectra, in the norms of the "
                          "first lattice; the spectra of the normalized "
                          "lattices are compared up to cutoff2 / scale "
                          "(default: %(default)s)")
    cmp.add_argument('--max-codim', type=positive_int, default=1,
                     help="maximal codimension of the focal spectra "
                          "(default: %(default)s)")
    cmp.add_argument('--focal-cutoff2', type=scalar, default=None,
                     help="cutoff of the focal spectra, in the norms of the "
                          "first lattice (default: cutoff2 / 4)")

    witt = sub.add_parser('witt', help="the rank 16 Witt experiment")
    _add_format(witt, 'witt')
    witt.add_argument('--cutoff2', type=scalar, default=Fraction(4),
                      help="squared radius cutoff (default: %(default)s)")
    witt.add_argument('--max-codim', type=positive_int, default=1,
                      help="maximal codimension of the focal spectra "
                           "(default: %(default)s)")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbosity, 2)]
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line interface and return the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        config = RunConfig(
            command=args.command,
            output_format=args.format,
            threads=default_threads(args.threads),
            budget=Budget(args.max_points, args.time_limit),
            verbosity=args.verbose)
        output, code = COMMANDS[args.command](args, config)
    except (ValueError, OSError) as exc:
        print(f"focaltorus: error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(output)
    return code
