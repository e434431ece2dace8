"""Finite binary information systems, problems, equation systems and tuple sets.

Attribute indices and tuple coordinates are 0-based throughout the package.
Element subsets are encoded as Python ints (bit ``j`` set means element ``j``
belongs to the subset), which keeps consistency checks to a few AND operations.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ParseError, StructureError

Bits = tuple[int, ...]
Literal = tuple[int, int]


def bitstring(bits: Iterable[int]) -> str:
    return "".join(str(b) for b in bits)


def parse_bits(text: str) -> Bits:
    if not text or set(text) - {"0", "1"}:
        raise StructureError(f"not a bit string: {text!r}")
    return tuple(int(c) for c in text)


@dataclass(frozen=True, eq=False)
class InformationSystem:
    """A finite universe with named binary attributes.

    ``matrix[j, k]`` is the value of attribute ``k`` on element ``j``.
    """

    elements: tuple[str, ...]
    names: tuple[str, ...]
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.uint8, copy=True)
        if m.ndim != 2 or m.shape != (len(self.elements), len(self.names)):
            raise StructureError(
                f"matrix shape {m.shape} does not match "
                f"{len(self.elements)} elements x {len(self.names)} attributes"
            )
        if not self.elements:
            raise StructureError("universe must be nonempty")
        if not self.names:
            raise StructureError("at least one attribute is required")
        if np.any(m > 1):
            raise StructureError("attribute values must be 0 or 1")
        if len(set(self.names)) != len(self.names):
            raise StructureError("attribute names must be unique")
        m.setflags(write=False)
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_columns(cls, elements: Sequence, columns: dict[str, Sequence[int]]):
        names = list(columns)
        matrix = np.array([columns[k] for k in names], dtype=np.uint8).T
        if not names:
            matrix = np.zeros((len(elements), 0), dtype=np.uint8)
        return cls(tuple(str(e) for e in elements), tuple(names), matrix)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def num_attributes(self) -> int:
        return len(self.names)

    @cached_property
    def universe_mask(self) -> int:
        return (1 << self.size) - 1

    @cached_property
    def _literal_masks(self) -> tuple[tuple[int, int], ...]:
        masks = []
        for k in range(self.num_attributes):
            col = self.matrix[:, k]
            one = sum(1 << j for j in np.flatnonzero(col))
            masks.append((self.universe_mask & ~one, one))
        return tuple(masks)

    def literal_mask(self, attribute: int, value: int) -> int:
        """Elements satisfying ``attribute(x) = value``."""
        return self._literal_masks[attribute][value]

    def column(self, attribute: int) -> Bits:
        self.check_attribute(attribute)
        return tuple(int(v) for v in self.matrix[:, attribute])

    def row(self, element: int) -> Bits:
        return tuple(int(v) for v in self.matrix[element])

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise StructureError(f"unknown attribute {name!r}") from None

    def element_index(self, element: str | int) -> int:
        if isinstance(element, (int, np.integer)):
            if not 0 <= element < self.size:
                raise StructureError(f"element index {element} out of range")
            return int(element)
        try:
            return self.elements.index(str(element))
        except ValueError:
            raise StructureError(f"unknown element {element!r}") from None

    def check_attribute(self, attribute: int) -> None:
        if not 0 <= attribute < self.num_attributes:
            raise StructureError(f"attribute index {attribute} out of range")

    def is_constant(self, attribute: int, elements: int | None = None) -> bool:
        """True when the attribute takes a single value on ``elements``."""
        mask = self.universe_mask if elements is None else elements
        zero, one = self._literal_masks[attribute]
        return not (mask & zero) or not (mask & one)

    def restrict(self, elements: int) -> "InformationSystem":
        """The subsystem on the given element subset (same attributes)."""
        idx = [j for j in range(self.size) if elements >> j & 1]
        return InformationSystem(
            tuple(self.elements[j] for j in idx), self.names, self.matrix[idx]
        )

    def problem(self, attributes: Sequence[int | str] | None = None) -> "Problem":
        if attributes is None:
            attributes = range(self.num_attributes)
        idx = [self.index_of(a) if isinstance(a, str) else int(a) for a in attributes]
        return Problem(self, tuple(idx))

    def with_duplicate(self, element: int) -> "InformationSystem":
        """Copy of the system with one element duplicated (row-identical)."""
        rows = np.vstack([self.matrix, self.matrix[element : element + 1]])
        name = f"{self.elements[element]}'"
        while name in self.elements:
            name += "'"
        return InformationSystem(self.elements + (name,), self.names, rows)

    def __repr__(self):
        return (
            f"InformationSystem({self.size} elements, "
            f"{self.num_attributes} attributes)"
        )


@dataclass(frozen=True, eq=False)
class Problem:
    """An ordered selection of attributes; repeats are allowed."""

    system: InformationSystem
    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if not self.indices:
            raise StructureError("a problem needs at least one attribute")
        for i in self.indices:
            self.system.check_attribute(i)

    @property
    def dim(self) -> int:
        return len(self.indices)

    def value(self, element: int) -> Bits:
        """The tuple z(a) for the element with the given index."""
        return tuple(int(self.system.matrix[element, k]) for k in self.indices)

    def coordinate_mask(self, coordinate: int, value: int) -> int:
        return self.system.literal_mask(self.indices[coordinate], value)

    def names(self) -> list[str]:
        return [self.system.names[k] for k in self.indices]

    def __repr__(self):
        return f"Problem({', '.join(self.names())})"


@dataclass(frozen=True)
class TupleSet:
    """A set of n-bit tuples (set semantics)."""

    n: int
    members: frozenset[Bits] = field(default_factory=frozenset)

    def __post_init__(self):
        members = frozenset(tuple(int(b) for b in t) for t in self.members)
        for t in members:
            if len(t) != self.n or any(b not in (0, 1) for b in t):
                raise StructureError(f"tuple {t} is not a {self.n}-bit tuple")
        object.__setattr__(self, "members", members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Bits]:
        return iter(self.sorted())

    def __contains__(self, item) -> bool:
        return tuple(item) in self.members

    def sorted(self) -> list[Bits]:
        return sorted(self.members)

    def restrict(self, coordinate: int, value: int) -> "TupleSet":
        return restrict(self, coordinate, value)

    def __str__(self):
        return "{" + ",".join(bitstring(t) for t in self.sorted()) + "}"


@dataclass(frozen=True)
class EquationSystem:
    """Equations ``attribute(x) = value``; the empty system is allowed."""

    equations: tuple[Literal, ...] = ()

    def __post_init__(self):
        eqs = tuple((int(a), int(v)) for a, v in self.equations)
        for _, v in eqs:
            if v not in (0, 1):
                raise StructureError(f"equation value {v} is not binary")
        object.__setattr__(self, "equations", eqs)

    def __len__(self) -> int:
        return len(self.equations)

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.equations)

    def attributes(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.equations)

    def describe(self, system: InformationSystem) -> str:
        return "{" + ", ".join(f"{system.names[a]}={v}" for a, v in self.equations) + "}"


def solution_set(system: InformationSystem, problem: Problem) -> TupleSet:
    """All tuples z(a) realized by elements of the universe."""
    if problem.system is not system:
        for i in problem.indices:
            system.check_attribute(i)
    cols = system.matrix[:, list(problem.indices)]
    return TupleSet(problem.dim, frozenset(map(tuple, np.unique(cols, axis=0).tolist())))


def restrict(delta: TupleSet, coordinate: int, value: int) -> TupleSet:
    """Members of ``delta`` whose coordinate equals ``value``."""
    if not 0 <= coordinate < delta.n:
        raise StructureError(f"coordinate {coordinate} out of range for width {delta.n}")
    return TupleSet(delta.n, frozenset(t for t in delta.members if t[coordinate] == value))


def solution_mask(system: InformationSystem, equations: Iterable[Literal]) -> int:
    mask = system.universe_mask
    for a, v in equations:
        system.check_attribute(a)
        mask &= system.literal_mask(a, v)
    return mask


def solutions(system: InformationSystem, equations: EquationSystem | Iterable[Literal]) -> list[str]:
    """Elements of the universe satisfying every equation."""
    mask = solution_mask(system, equations)
    return [e for j, e in enumerate(system.elements) if mask >> j & 1]


def is_consistent(system: InformationSystem, equations: EquationSystem | Iterable[Literal]) -> bool:
    return solution_mask(system, equations) != 0


def mask_elements(mask: int) -> Iterator[int]:
    j = 0
    while mask:
        if mask & 1:
            yield j
        mask >>= 1
        j += 1


# --- CSV ingestion -----------------------------------------------------------


def parse_table(text: str) -> InformationSystem:
    rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
    if not rows:
        raise ParseError("empty table")
    header = [c.strip() for c in rows[0]]
    if len(header) < 2 or header[0] != "element":
        raise ParseError("header must be 'element,<attr1>,...'")
    names = header[1:]
    elements, values = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        row = [c.strip() for c in row]
        if len(row) != len(header):
            raise ParseError(f"line {lineno}: expected {len(header)} fields, got {len(row)}")
        if any(c not in ("0", "1") for c in row[1:]):
            raise ParseError(f"line {lineno}: attribute values must be 0 or 1")
        elements.append(row[0])
        values.append([int(c) for c in row[1:]])
    if not elements:
        raise ParseError("table has no elements")
    try:
        return InformationSystem(tuple(elements), tuple(names), np.array(values, dtype=np.uint8))
    except StructureError as exc:
        raise ParseError(str(exc)) from exc


def read_table(path: str | Path) -> InformationSystem:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_table(text)


def format_table(system: InformationSystem) -> str:
    lines = ["element," + ",".join(system.names)]
    for j, e in enumerate(system.elements):
        lines.append(e + "," + ",".join(str(int(v)) for v in system.matrix[j]))
    return "\n".join(lines) + "\n"


def write_table(system: InformationSystem, path: str | Path) -> None:
    Path(path).write_text(format_table(system), encoding="utf-8", newline="\n")
