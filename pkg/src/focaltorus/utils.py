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


"""Utility functions for exact scalars."""

from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from numbers import Rational
from typing import Any, Iterable, Union

from decimalfp import Decimal

#: Values accepted where an exact scalar is expected
ScalarLikeT = Union[Rational, int, str]


def as_scalar(value: Any) -> Fraction:
    """Return `value` as exact rational number.

    Args:
        value: int, Rational (Fraction, decimalfp.Decimal, …) or string
            holding either a fraction 'p/q' or a decimal literal

    Returns:
        Fraction equal to `value`

    Raises:
        TypeError: `value` is a float or not a number at all
        ValueError: `value` is a string not denoting a rational number

    >>> as_scalar('3/6')
    Fraction(1, 2)
    >>> as_scalar('0.125')
    Fraction(1, 8)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Can't use a bool as scalar.")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"Can't convert a '{type(value).__name__}' to an exact "
                    "scalar.")


def parse_scalar(s: str) -> Fraction:
    """Parse a string holding a fraction 'p/q' or a decimal literal."""
    s = s.strip()
    if '/' in s:
        num, den = s.split('/', 1)
        try:
            res = Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"Can't convert '{s}' to a rational number.") \
                from None
        return res
    try:
        return Fraction(Decimal(s))
    except (ValueError, TypeError):
        raise ValueError(f"Can't convert '{s}' to a rational number.") \
            from None


def format_scalar(value: Fraction) -> str:
    """Return `value` as 'p/q' (or 'p' if integral)."""
    return str(value)


def lcm(*numbers: int) -> int:
    """Return the least common multiple of `numbers` (1 if empty)."""
    return reduce(lambda a, b: a * b // gcd(a, b), numbers, 1)


def common_denominator(values: Iterable[Fraction]) -> int:
    """Return the least common denominator of `values`."""
    return lcm(*(v.denominator for v in values))


def fixed_sqrt(value: Fraction, precision: int = 6) -> Decimal:
    """Return the square root of `value`, truncated to `precision` digits.

    The result is computed with integer arithmetic only, so it is
    reproducible on every platform.

    >>> fixed_sqrt(Fraction(1, 2), 4)
    Decimal('0.7071')
    """
    if value < 0:
        raise ValueError("Can't take the square root of a negative number.")
    scale = 10 ** precision
    root = isqrt(value.numerator * scale * scale // value.denominator)
    if root == 0:
        # a zero fraction would lose its fractional digits
        return Decimal(0, precision)
    return Decimal(Fraction(root, scale), precision)
