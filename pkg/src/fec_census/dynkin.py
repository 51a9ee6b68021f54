"""
Simply-laced Dynkin diagrams, their Weyl groups in the reflection
representation, and two independent counts of full exceptional collections:

* ``deligne_count``: the closed form mu! h^mu / (d_1 ... d_mu);
* ``count_reflection_factorizations``: the number of reduced factorizations
  of a Coxeter element into reflections, i.e. maximal chains of the
  noncrossing partition lattice [e, c], by dynamic programming over the
  interval in absolute order.

Weyl group elements are integer matrices acting on column vectors written in
the simple-root basis. Nodes follow Bourbaki numbering.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import _intlinalg

FAMILIES = ("A", "D", "E")


@dataclass(frozen=True, order=True)
class DynkinDiagram:
    family: str
    rank: int

    def __post_init__(self):
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES:
            raise ValueError(f"unsupported Dynkin family {self.family!r}")
        n = self.rank
        ok = {"A": n >= 0, "D": n >= 4, "E": n in (6, 7, 8)}[fam]
        if not ok:
            raise ValueError(f"rank {n} is not valid for type {fam}")

    @classmethod
    def parse(cls, text: str) -> DynkinDiagram:
        """Parse ``"A5"``, ``"d7"``, ``"E8"``; ``"A0"`` is the empty diagram."""
        m = re.fullmatch(r"\s*([ADEade])\s*_?\s*(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Dynkin diagram {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CoxeterData:
    degrees: tuple[int, ...]
    coxeter_number: int

    @property
    def group_order(self) -> int:
        return math.prod(self.degrees)

    @property
    def num_reflections(self) -> int:
        return sum(d - 1 for d in self.degrees)


def _edges(D: DynkinDiagram) -> list[tuple[int, int]]:
    n = D.rank
    if D.family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if D.family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # E_n: chain 1-3-4-...-n with node 2 attached to node 4 (1-based)
    chain = [0] + list(range(2, n))
    return [(chain[k], chain[k + 1]) for k in range(len(chain) - 1)] + [(1, 3)]


def cartan_matrix(D: DynkinDiagram) -> list[list[int]]:
    n = D.rank
    C = [[2 * int(i == j) for j in range(n)] for i in range(n)]
    for i, j in _edges(D):
        C[i][j] = C[j][i] = -1
    return C


def coxeter_data(D: DynkinDiagram) -> CoxeterData:
    """Degrees of the basic invariants and the Coxeter number."""
    n, fam = D.rank, D.family
    if n < 1:
        raise ValueError("Coxeter data needs rank >= 1")
    if fam == "A":
        degrees = list(range(2, n + 2))
    elif fam == "D":
        degrees = list(range(2, 2 * n - 1, 2)) + [n]
    else:
        degrees = {
            6: [2, 5, 6, 8, 9, 12],
            7: [2, 6, 8, 10, 12, 14, 18],
            8: [2, 8, 12, 14, 18, 20, 24, 30],
        }[n]
    degrees.sort()
    return CoxeterData(tuple(degrees), degrees[-1])


def deligne_count(D: DynkinDiagram) -> int:
    """
    mu! h^mu / (d_1 ... d_mu), with the empty diagram counted once.

    >>> deligne_count(DynkinDiagram("E", 6))
    41472
    """
    if D.rank == 0:
        return 1
    data = coxeter_data(D)
    q, rem = divmod(math.factorial(D.rank) * data.coxeter_number ** D.rank, data.group_order)
    assert rem == 0, f"non-integral count for {D}"
    return q


def catalan_number(D: DynkinDiagram) -> int:
    """prod (d_i + h) / d_i, the size of the noncrossing partition lattice."""
    data = coxeter_data(D)
    h = data.coxeter_number
    q, rem = divmod(math.prod(d + h for d in data.degrees), data.group_order)
    assert rem == 0
    return q


# --------------------------------------------------------------------------
# Weyl group elements
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class WeylElement:
    """Exact integer matrix in the simple-root basis; equality and hashing by entries."""

    matrix: tuple[tuple[int, ...], ...]

    @classmethod
    def identity(cls, n: int) -> WeylElement:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_array(cls, a) -> WeylElement:
        return cls(tuple(tuple(int(x) for x in row) for row in a))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __matmul__(self, other: WeylElement) -> WeylElement:
        cols = list(zip(*other.matrix))
        return WeylElement(tuple(
            tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in self.matrix
        ))

    def inverse(self) -> WeylElement:
        inv = _intlinalg.inverse(self.matrix)
        if any(x.denominator != 1 for row in inv for x in row):
            raise ArithmeticError("inverse is not integral")
        return WeylElement(tuple(tuple(int(x) for x in row) for row in inv))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(x * y for x, y in zip(row, v)) for row in self.matrix)

    def to_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64).reshape(self.dim, self.dim)

    def is_identity(self) -> bool:
        return self == WeylElement.identity(self.dim)


def absolute_length(w: WeylElement) -> int:
    """Codimension of the fixed space: mu - dim ker(w - id) over the rationals."""
    n = w.dim
    return _intlinalg.rank([[w.matrix[i][j] - int(i == j) for j in range(n)] for i in range(n)])


def root_reflection(D: DynkinDiagram, root: Sequence[int]) -> WeylElement:
    """Matrix of v -> v - (root . C v) root; every root has squared length 2."""
    C = cartan_matrix(D)
    n = D.rank
    alpha_C = [sum(root[k] * C[k][j] for k in range(n)) for j in range(n)]
    return WeylElement(tuple(
        tuple(int(i == j) - root[i] * alpha_C[j] for j in range(n)) for i in range(n)
    ))


def simple_reflections(D: DynkinDiagram) -> list[WeylElement]:
    n = D.rank
    return [root_reflection(D, [int(k == i) for k in range(n)]) for i in range(n)]


def _reflection_root(t: WeylElement) -> tuple[int, ...]:
    # (id - t) = alpha (alpha^T C): every nonzero column is a multiple of alpha
    n = t.dim
    for j in range(n):
        col = [int(i == j) - t.matrix[i][j] for i in range(n)]
        if any(col):
            g = math.gcd(*col)
            col = [x // g for x in col]
            if next(x for x in col if x) < 0:
                col = [-x for x in col]
            return tuple(col)
    raise ValueError("identity is not a reflection")


@lru_cache(maxsize=None)
def _reflections(D: DynkinDiagram) -> tuple[tuple[WeylElement, ...], tuple[tuple[int, ...], ...]]:
    simple = simple_reflections(D)
    found = {s: None for s in simple}
    queue = deque(simple)
    while queue:
        t = queue.popleft()
        for s in simple:
            u = s @ t @ s
            if u not in found:
                found[u] = None
                queue.append(u)
    pairs = sorted(((_reflection_root(t), t) for t in found), key=lambda p: (sum(p[0]), p[0]))
    return tuple(t for _, t in pairs), tuple(r for r, _ in pairs)


def all_reflections(D: DynkinDiagram) -> list[WeylElement]:
    """Closure of the simple reflections under conjugation, ordered by root height."""
    return list(_reflections(D)[0])


def positive_roots(D: DynkinDiagram) -> list[tuple[int, ...]]:
    return list(_reflections(D)[1])


def coxeter_element(D: DynkinDiagram, order: Iterable[int] | None = None) -> WeylElement:
    """Product s_{o_1} s_{o_2} ... s_{o_mu}; default order is 1..mu (0-based indices here)."""
    simple = simple_reflections(D)
    order = list(range(D.rank)) if order is None else list(order)
    if sorted(order) != list(range(D.rank)):
        raise ValueError(f"{order} is not a permutation of the simple reflections")
    c = WeylElement.identity(D.rank)
    for i in order:
        c = c @ simple[i]
    return c


def group_order_by_closure(D: DynkinDiagram, limit: int = 10**6) -> int:
    """Size of the group generated by the simple reflections, by breadth-first closure."""
    simple = simple_reflections(D)
    e = WeylElement.identity(D.rank)
    seen = {e}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for s in simple:
            u = s @ w
            if u not in seen:
                seen.add(u)
                if len(seen) > limit:
                    raise RuntimeError(f"group of {D} exceeds {limit} elements")
                queue.append(u)
    return len(seen)


# --------------------------------------------------------------------------
# Maximal chains in [e, c]
# --------------------------------------------------------------------------

@dataclass
class FactorizationResult:
    diagram: DynkinDiagram
    order: tuple[int, ...]
    count: int
    interval_size: int
    level_sizes: list[int] = field(default_factory=list)


def factorization_dp(D: DynkinDiagram, order: Iterable[int] | None = None) -> FactorizationResult:
    """
    Count reduced reflection factorizations of the Coxeter element built from ``order``.

    Works top-down from c one absolute-length level at a time. An element w
    at level k has a child t w for each reflection t whose root lies in the
    moved space im(w - id), the B-orthogonal complement of ker(w - id).
    ``paths[w]`` is the number of reduced prefixes c = t_1 ... t_m w; it
    reaches the total at the identity. The absolute length of every visited
    element is recomputed from its fixed space and checked against its level.
    """
    n = D.rank
    order = tuple(range(n)) if order is None else tuple(order)
    if n == 0:
        return FactorizationResult(D, order, 1, 1, [1])
    C = np.array(cartan_matrix(D), dtype=np.int64)
    roots = np.array(positive_roots(D), dtype=np.int64)
    rootC = roots @ C
    eye = np.eye(n, dtype=np.int64)

    c = coxeter_element(D, order).to_array()
    level = {c.tobytes(): 1}
    level_sizes = []
    for k in range(n, 0, -1):
        level_sizes.append(len(level))
        below: dict[bytes, int] = {}
        for key, paths in level.items():
            w = np.frombuffer(key, dtype=np.int64).reshape(n, n)
            fixed = _intlinalg.nullspace((w - eye).tolist())
            if n - len(fixed) != k:
                raise ArithmeticError(f"element at level {k} has absolute length {n - len(fixed)}")
            if fixed:
                mask = ~np.any(np.array(fixed, dtype=np.int64) @ rootC.T, axis=0)
            else:
                mask = np.ones(len(roots), dtype=bool)
            S, SC = roots[mask], rootC[mask]
            children = w[None, :, :] - S[:, :, None] * (SC @ w)[:, None, :]
            for child in children:
                ckey = child.tobytes()
                below[ckey] = below.get(ckey, 0) + paths
        level = below
    level_sizes.append(len(level))
    (ekey, total), = level.items()
    assert np.array_equal(np.frombuffer(ekey, dtype=np.int64).reshape(n, n), eye)
    level_sizes.reverse()
    return FactorizationResult(D, order, total, sum(level_sizes), level_sizes)


def count_reflection_factorizations(D: DynkinDiagram, order: Iterable[int] | None = None) -> int:
    """Number of maximal chains e < ... < c in absolute order."""
    return factorization_dp(D, order).count


def catalan_interval_size(D: DynkinDiagram, order: Iterable[int] | None = None) -> int:
    """Number of distinct elements of [e, c] visited by the DP."""
    return factorization_dp(D, order).interval_size
