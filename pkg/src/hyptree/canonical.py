"""Finite instances of the seven canonical information systems U1..U7.

Each generator keeps attribute indices up to ``n`` and a universe that realizes
every row the infinite system realizes on those attributes, except U1 and U2
whose universes grow exponentially and are budgeted.
"""

from __future__ import annotations

import enum
import itertools

import numpy as np

from .errors import BudgetExceeded, StructureError
from .table import InformationSystem

U1_MAX = 4
U2_MAX = 10


class CanonicalKind(enum.Enum):
    U1 = 1
    U2 = 2
    U3 = 3
    U4 = 4
    U5 = 5
    U6 = 6
    U7 = 7

    @classmethod
    def parse(cls, text: str) -> "CanonicalKind":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise StructureError(f"unknown canonical system {text!r}") from None

    def __str__(self):
        return self.name.lower()


def _p(i: int, j: int) -> int:
    return int(j == i)


def _l(i: int, j: int) -> int:
    return int(j > i)


def u1(n: int, max_size: int = U1_MAX) -> InformationSystem:
    """Universe {1..n}; every distinct binary column over it is an attribute."""
    if n > max_size:
        raise BudgetExceeded(f"U1 with {n} elements needs {2 ** n} columns (cap {max_size})")
    elements = [str(j) for j in range(1, n + 1)]
    cols = {}
    for code in range(2 ** n):
        bits = [(code >> (n - 1 - j)) & 1 for j in range(n)]
        cols["c" + "".join(map(str, bits))] = bits
    return InformationSystem.from_columns(elements, cols)


def u2(n: int, max_size: int = U2_MAX) -> InformationSystem:
    """All 2^n bit strings with the n coordinate projections (the full cube)."""
    if n > max_size:
        raise BudgetExceeded(f"U2 with n={n} has {2 ** n} elements (cap {max_size})")
    rows = list(itertools.product((0, 1), repeat=n))
    elements = ["".join(map(str, r)) for r in rows]
    return InformationSystem(tuple(elements), tuple(f"f{i}" for i in range(1, n + 1)), np.array(rows))


def u3(n: int) -> InformationSystem:
    universe = range(1, n + 2)
    cols = {f"p{i}": [_p(i, j) for j in universe] for i in range(1, n + 1)}
    cols.update({f"l{i}": [_l(i, j) for j in universe] for i in range(1, n + 1)})
    return InformationSystem.from_columns(universe, cols)


def u4(n: int) -> InformationSystem:
    """Grid {1..n+1}^2 with f_i (first coordinate > i) and the point indicators f_i_j.

    Row n+1 and column n+1 stand in for every grid point beyond the attribute
    range, so consistency over these attributes matches the infinite grid.
    """
    side = range(1, n + 2)
    universe = [(p, q) for p in side for q in side]
    cols = {f"f{i}": [int(p > i) for p, _ in universe] for i in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            cols[f"f{i}_{j}"] = [int(a == (i, j)) for a in universe]
    return InformationSystem.from_columns([f"{p}-{q}" for p, q in universe], cols)


def u5(n: int) -> InformationSystem:
    universe = [(i, j) for i in range(1, n + 1) for j in range(1, i + 1)]
    cols = {f"f{i}": [int(a == i) for a, _ in universe] for i in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            cols[f"f{i}_{j}"] = [int(a == (i, j)) for a in universe]
    return InformationSystem.from_columns([f"{p}-{q}" for p, q in universe], cols)


def u6(n: int) -> InformationSystem:
    universe = range(1, n + 2)
    return InformationSystem.from_columns(
        universe, {f"p{i}": [_p(i, j) for j in universe] for i in range(1, n + 1)}
    )


def u7(n: int) -> InformationSystem:
    universe = range(1, n + 2)
    return InformationSystem.from_columns(
        universe, {f"l{i}": [_l(i, j) for j in universe] for i in range(1, n + 1)}
    )


_GENERATORS = {
    CanonicalKind.U1: u1,
    CanonicalKind.U2: u2,
    CanonicalKind.U3: u3,
    CanonicalKind.U4: u4,
    CanonicalKind.U5: u5,
    CanonicalKind.U6: u6,
    CanonicalKind.U7: u7,
}


def canonical_system(kind: CanonicalKind | str, n: int) -> InformationSystem:
    if isinstance(kind, str):
        kind = CanonicalKind.parse(kind)
    if n < 1:
        raise StructureError("size parameter must be at least 1")
    return _GENERATORS[kind](n)
