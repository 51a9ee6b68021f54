"""
Degree of the Lyashko-Looijenga map for the simple elliptic singularities
E6~, E7~, E8~ in Legendre normal form, from the weights of the unfolding
coordinates:

    deg LL = mu! * (1/2) sum_{j=2}^{mu-1} 1/w_j  /  prod_{j=2}^{mu-1} w_j
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import census
from .orbifold import WeightTuple, invariants


@dataclass(frozen=True)
class WeightVector:
    label: str
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        w = self.weights
        if len(w) < 2 or w[0] != 1 or w[-1] != 0:
            raise ValueError(f"{self.label}: weights must start with 1 and end with 0, got {w}")
        if not all(0 < x < 1 for x in w[1:-1]):
            raise ValueError(f"{self.label}: interior weights must lie in (0, 1)")

    @property
    def mu(self) -> int:
        return len(self.weights)


def _weights(*parts: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(p) for p in parts)


WEIGHT_TABLE: dict[str, WeightVector] = {
    "E6tilde": WeightVector("E6tilde", _weights("1", "2/3", "2/3", "2/3", "1/3", "1/3", "1/3", "0")),
    "E7tilde": WeightVector("E7tilde", _weights("1", "3/4", "3/4", "2/4", "2/4", "2/4", "1/4", "1/4", "0")),
    "E8tilde": WeightVector(
        "E8tilde", _weights("1", "5/6", "4/6", "4/6", "3/6", "3/6", "2/6", "2/6", "1/6", "0")
    ),
}

# Gabrielov numbers of each singularity
PAIRING: dict[str, WeightTuple] = {
    "E6tilde": WeightTuple((3, 3, 3)),
    "E7tilde": WeightTuple((2, 4, 4)),
    "E8tilde": WeightTuple((2, 3, 6)),
}


def _validate_tables() -> None:
    for label, wv in WEIGHT_TABLE.items():
        mu = invariants(PAIRING[label]).mu
        if wv.mu != mu:
            raise ValueError(f"{label} lists {wv.mu} weights but its Gabrielov tuple has mu = {mu}")


_validate_tables()


def normalize_label(text: str) -> str:
    """Accept ``E7~``, ``E7tilde``, ``e7`` and the like."""
    t = text.strip().lower().replace("~", "").replace("tilde", "").replace("_", "")
    label = f"E{t[1:]}tilde" if t[:1] == "e" else ""
    if label not in WEIGHT_TABLE:
        raise ValueError(f"unknown singularity type {text!r}; expected one of E6~, E7~, E8~")
    return label


def ll_degree(w: WeightVector) -> int:
    interior = w.weights[1:-1]
    if any(x == 0 for x in interior):
        raise ValueError(f"{w.label}: zero interior weight")
    value = math.factorial(w.mu) * (sum(1 / x for x in interior) / 2) / math.prod(interior)
    if value.denominator != 1:
        raise ArithmeticError(f"{w.label}: LL degree {value} is not an integer")
    return value.numerator


@dataclass(frozen=True)
class CorollaryCheck:
    label: str
    tuple: WeightTuple
    ll_degree: int
    fec_mod_gamma2: int

    @property
    def passed(self) -> bool:
        return self.ll_degree == self.fec_mod_gamma2


def corollary_check(label: str) -> CorollaryCheck:
    """Compare deg LL with |FEC / Gamma(2)-bar| for the paired tuple."""
    label = normalize_label(label)
    A = PAIRING[label]
    return CorollaryCheck(label, A, ll_degree(WEIGHT_TABLE[label]), census.fec_mod_gamma2(A))
