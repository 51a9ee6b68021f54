"""
Counts e(A) of full exceptional collections modulo spherical twists and
shifts on an orbifold projective line with orders A.

Domestic tuples (chi > 0) use the closed form

    e(A) = mu! / (a_1! ... a_r! chi) * a_1^a_1 ... a_r^a_r .

Tubular tuples (chi = 0) have two routes that must agree: a closed form and
the cut-and-join recursion over the last term of a collection, which expands
e(A) through domestic counts of the reduced tuples A_{i,j} and type-A counts
j^(j-2).
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import modular
from .orbifold import (
    Classification,
    OrbifoldInvariants,
    WeightTuple,
    classify,
    invariants,
    subtuple,
)


class Route(enum.Enum):
    DOMESTIC_CLOSED_FORM = "DomesticClosedForm"
    TUBULAR_CLOSED_FORM = "TubularClosedForm"
    TUBULAR_RECURSION = "TubularRecursion"


class CountingError(ValueError):
    """Raised for tuples outside the domain of a counting formula."""


def _as_int(q: Fraction, what: str) -> int:
    if q.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {q}")
    return q.numerator


def _factorial_power_ratio(A: WeightTuple) -> Fraction:
    """mu! * prod a^a / prod a!"""
    orders = A.orders
    return Fraction(
        math.factorial(invariants(A).mu) * math.prod(a**a for a in orders),
        math.prod(math.factorial(a) for a in orders),
    )


def type_a_count(j: int) -> int:
    """e of the type A_{j-1} quiver, j^(j-2); A_0 is the zero category and counts once."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return _as_int(Fraction(j) ** (j - 2), "j^(j-2)")


def domestic_count(A: WeightTuple) -> int:
    """
    e(A) for chi_A > 0.

    >>> domestic_count(WeightTuple((2, 2, 2)))
    1920
    """
    chi = invariants(A).chi
    if chi <= 0:
        raise CountingError(f"domestic formula needs chi > 0, got chi={chi} for ({A})")
    return _as_int(_factorial_power_ratio(A) / chi, f"domestic count of ({A})")


def _require_tubular(A: WeightTuple) -> OrbifoldInvariants:
    inv = invariants(A)
    if inv.chi != 0:
        raise CountingError(f"tubular formula needs chi = 0, got chi={inv.chi} for ({A})")
    return inv


def tubular_count_closed(A: WeightTuple) -> int:
    inv = _require_tubular(A)
    value = (
        _factorial_power_ratio(A)
        * Fraction(sum(a * a * (a - 1) for a in A.orders), 2 * inv.mu)
        * Fraction(modular.index_psl(inv.lcm), inv.lcm)
    )
    return _as_int(value, f"closed tubular count of ({A})")


def recursion_terms(A: WeightTuple) -> list[tuple[int, int, int]]:
    """(i, j, term) for every summand of the cut-and-join recursion, in (i, j) order."""
    inv = _require_tubular(A)
    ratio = Fraction(modular.index_psl(inv.lcm), inv.lcm)
    terms = []
    for i, a in enumerate(A.orders, start=1):
        for j in range(1, a):
            term = (
                math.comb(inv.mu - 1, j - 1)
                * domestic_count(subtuple(A, i, j))
                * type_a_count(j)
                * a
                * ratio
            )
            terms.append((i, j, _as_int(term, f"recursion term ({i},{j})")))
    return terms


def tubular_count_recursive(A: WeightTuple) -> int:
    return sum(term for _, _, term in recursion_terms(A))


def point_sum(A: WeightTuple, i: int) -> Fraction:
    """Inner recursion sum at point i: sum_j C(mu-1, j-1) e(A_{i,j}) j^(j-2)."""
    inv = _require_tubular(A)
    a = A.orders[i - 1]
    return Fraction(sum(
        math.comb(inv.mu - 1, j - 1) * domestic_count(subtuple(A, i, j)) * type_a_count(j)
        for j in range(1, a)
    ))


def point_sum_closed(A: WeightTuple, i: int) -> Fraction:
    """Closed value of ``point_sum``: mu!/prod a! * prod a^a * a_i (a_i - 1) / (2 mu)."""
    inv = _require_tubular(A)
    a = A.orders[i - 1]
    return _factorial_power_ratio(A) * Fraction(a * (a - 1), 2 * inv.mu)


def tubular_count(A: WeightTuple, route: Route = Route.TUBULAR_CLOSED_FORM) -> int:
    if route is Route.TUBULAR_CLOSED_FORM:
        return tubular_count_closed(A)
    if route is Route.TUBULAR_RECURSION:
        return tubular_count_recursive(A)
    raise ValueError(f"{route} is not a tubular route")


def fec_mod_gamma(A: WeightTuple, e_value: int | None = None) -> int:
    """|FEC / PSL(2,Z)| = e(A) / [PSL(2,Z) : Gamma(l_A)]."""
    inv = _require_tubular(A)
    e_value = tubular_count_closed(A) if e_value is None else e_value
    q, rem = divmod(e_value, modular.index_psl(inv.lcm))
    if rem:
        raise ArithmeticError(f"e({A}) = {e_value} is not divisible by the index of Gamma({inv.lcm})")
    return q


def fec_mod_gamma2(A: WeightTuple, e_value: int | None = None) -> int:
    """|FEC / Gamma(2)-bar| = |FEC / PSL(2,Z)| * [PSL(2,Z) : Gamma(2)]."""
    return fec_mod_gamma(A, e_value) * modular.index_psl(2)


@dataclass
class CountReport:
    tuple: WeightTuple
    e_value: int
    route: Route
    derived: dict[str, int] = field(default_factory=dict)
    e_recursive: int | None = None
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def census(A: WeightTuple, route: str = "both") -> CountReport:
    """
    Count ``A`` by the requested route: ``"closed"``, ``"recursive"`` or ``"both"``.

    Domestic tuples have a single closed form, whatever ``route`` says.
    """
    if route not in ("closed", "recursive", "both"):
        raise ValueError(f"unknown route {route!r}")
    kind = classify(A)
    if kind is Classification.WILD:
        raise CountingError(f"({A}) is wild (chi < 0); no counting formula is available")
    if kind is Classification.DOMESTIC:
        return CountReport(A, domestic_count(A), Route.DOMESTIC_CLOSED_FORM)

    closed = tubular_count_closed(A) if route in ("closed", "both") else None
    recursive = tubular_count_recursive(A) if route in ("recursive", "both") else None
    e_value = closed if closed is not None else recursive
    report = CountReport(
        A,
        e_value,
        Route.TUBULAR_CLOSED_FORM if closed is not None else Route.TUBULAR_RECURSION,
        e_recursive=recursive,
    )
    idx = modular.index_psl(invariants(A).lcm)
    report.checks.append((f"e divisible by index of Gamma({invariants(A).lcm})", e_value % idx == 0))
    if route == "both":
        report.checks.append(("recursion equals closed form", closed == recursive))
    if e_value % idx == 0:
        report.derived["fec_mod_gamma"] = fec_mod_gamma(A, e_value)
        report.derived["fec_mod_gamma2"] = fec_mod_gamma2(A, e_value)
    return report
