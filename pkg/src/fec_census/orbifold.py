"""
Weight tuples A = (a_1, ..., a_r) of orbifold orders and their invariants.

Entries equal to 1 are kept; they show up when an order is reduced all the
way by ``subtuple`` and are neutral for every count in this package.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


class Classification(enum.Enum):
    DOMESTIC = "Domestic"
    TUBULAR = "Tubular"
    WILD = "Wild"


@dataclass(frozen=True, init=False)
class WeightTuple:
    """Ascending-sorted tuple of orbifold orders, each at least 1."""

    orders: tuple[int, ...]

    def __init__(self, orders: Iterable[int] = ()):
        orders = tuple(orders)
        for a in orders:
            if isinstance(a, bool) or not isinstance(a, int):
                raise TypeError(f"orbifold orders must be integers, got {a!r}")
            if a < 1:
                raise ValueError(f"orbifold orders must be >= 1, got {a}")
        object.__setattr__(self, "orders", tuple(sorted(orders)))

    @classmethod
    def parse(cls, text: str) -> WeightTuple:
        """Parse comma-separated decimal integers, e.g. ``"2,3,6"``; ``""`` is the empty tuple."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            orders = [int(part) for part in text.split(",")]
        except ValueError:
            raise ValueError(f"cannot parse weight tuple {text!r}") from None
        return cls(orders)

    def __str__(self) -> str:
        return ",".join(map(str, self.orders))

    def __repr__(self) -> str:
        return f"WeightTuple(({', '.join(map(str, self.orders))}{',' if len(self.orders) == 1 else ''}))"

    def __len__(self) -> int:
        return len(self.orders)

    def __iter__(self):
        return iter(self.orders)

    def __getitem__(self, index: int) -> int:
        return self.orders[index]


@dataclass(frozen=True)
class OrbifoldInvariants:
    lcm: int
    mu: int
    chi: Fraction


def invariants(A: WeightTuple) -> OrbifoldInvariants:
    """
    Return (lcm, mu, chi) of ``A``.

    >>> invariants(WeightTuple((2, 3, 6)))
    OrbifoldInvariants(lcm=6, mu=10, chi=Fraction(0, 1))
    """
    return OrbifoldInvariants(
        lcm=math.lcm(*A.orders) if A.orders else 1,
        mu=2 + sum(a - 1 for a in A.orders),
        chi=2 + sum((Fraction(1, a) - 1 for a in A.orders), Fraction(0)),
    )


def classify(A: WeightTuple) -> Classification:
    chi = invariants(A).chi
    if chi > 0:
        return Classification.DOMESTIC
    if chi == 0:
        return Classification.TUBULAR
    return Classification.WILD


TUBULAR_TUPLES: tuple[WeightTuple, ...] = (
    WeightTuple((2, 2, 2, 2)),
    WeightTuple((3, 3, 3)),
    WeightTuple((2, 4, 4)),
    WeightTuple((2, 3, 6)),
)


def subtuple(A: WeightTuple, i: int, j: int) -> WeightTuple:
    """
    Replace the order ``a_i`` (1-based ``i``) by ``a_i - j``, for ``1 <= j <= a_i - 1``.

    The index refers to the canonical (sorted) order of ``A``. The reduced
    entry is kept even when it becomes 1.

    >>> subtuple(WeightTuple((2, 4, 4)), 2, 1)
    WeightTuple((2, 3, 4))
    """
    r = len(A)
    if not 1 <= i <= r:
        raise ValueError(f"point index {i} outside 1..{r}")
    a = A.orders[i - 1]
    if not 1 <= j <= a - 1:
        raise ValueError(f"reduction {j} outside 1..{a - 1} for order {a}")
    orders = list(A.orders)
    orders[i - 1] = a - j
    return WeightTuple(orders)
