"""
Abel-type identities behind the collapse of the tubular recursion:

    n x^(n-1)          = sum_{j=1}^n C(n,j) (x-j)^(n-j) j^(j-1)
    n(n-1)/2 x^(n-2)   = sum_{j=1}^n C(n,j) (x-j)^(n-j) (j-1) j^(j-2)
    (n-1) n^n / 2      = sum_{j=1}^n C(n,j) (n-j)^(n-j+1) j^(j-2)

All evaluation is in exact rationals, so 0^0 = 1 and 1^(-1) = 1.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable


def _pow(base, exp: int) -> Fraction:
    return Fraction(base) ** exp


def abel_1_sides(n: int, x) -> tuple[Fraction, Fraction]:
    x = Fraction(x)
    lhs = n * _pow(x, n - 1)
    rhs = sum((math.comb(n, j) * _pow(x - j, n - j) * _pow(j, j - 1) for j in range(1, n + 1)), Fraction(0))
    return lhs, rhs


def abel_2_sides(n: int, x) -> tuple[Fraction, Fraction]:
    x = Fraction(x)
    # n(n-1)/2 vanishes at n = 1, where x^(-1) would otherwise be evaluated
    lhs = Fraction(n * (n - 1), 2) * _pow(x, n - 2) if n >= 2 else Fraction(0)
    rhs = sum(
        (math.comb(n, j) * _pow(x - j, n - j) * (j - 1) * _pow(j, j - 2) for j in range(1, n + 1)),
        Fraction(0),
    )
    return lhs, rhs


def corollary_sides(n: int) -> tuple[Fraction, Fraction]:
    lhs = Fraction((n - 1) * n**n, 2)
    rhs = sum(
        (math.comb(n, j) * _pow(n - j, n - j + 1) * _pow(j, j - 2) for j in range(1, n + 1)),
        Fraction(0),
    )
    return lhs, rhs


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def check_abel_1(n: int, x) -> bool:
    """
    >>> check_abel_1(3, 5)
    True
    """
    _check_n(n)
    lhs, rhs = abel_1_sides(n, x)
    return lhs == rhs


def check_abel_2(n: int, x) -> bool:
    _check_n(n)
    lhs, rhs = abel_2_sides(n, x)
    return lhs == rhs


def check_corollary(n: int) -> bool:
    _check_n(n)
    lhs, rhs = corollary_sides(n)
    return lhs == rhs


def sample_points(n: int) -> list[Fraction]:
    """n + 2 distinct rationals, enough to certify a degree-(n-1) polynomial identity."""
    return [Fraction(2 * k - n, 3) for k in range(n + 2)]


def failures(n_max: int, points: Iterable[Fraction] | None = None) -> list[str]:
    """Names of every failing instance for n <= n_max (empty if all hold)."""
    bad = []
    for n in range(1, n_max + 1):
        xs = sample_points(n) if points is None else list(points)
        for x in xs:
            if not check_abel_1(n, x):
                bad.append(f"abel_1(n={n}, x={x})")
            if not check_abel_2(n, x):
                bad.append(f"abel_2(n={n}, x={x})")
    return bad
