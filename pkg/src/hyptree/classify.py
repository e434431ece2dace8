"""Finite-scale classification of information systems.

The classes behind the extended indicator vector are properties of infinite
systems. Here each bit is estimated from one finite instance under explicit
caps, and every bit carries the object that justifies it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .canonical import CanonicalKind, canonical_system
from .errors import CertificateViolation, StructureError
from .strategies import find_d_complete_tree, is_d_complete
from .subsystems import (
    DEFAULT_K_CAP,
    KLevels,
    i_reduced_number,
    independence_dimension,
    is_independent,
    is_minimal_inconsistent,
    is_r_i_reduced,
    is_r_reduced,
    k_level,
    min_equivalent_subsystem,
    min_inconsistent_subsystem,
    reduced_number,
)
from .table import EquationSystem, InformationSystem, Problem, solution_mask, solution_set

__all__ = [
    "ClassificationReport",
    "DEFAULT_CAP",
    "INDICATOR_ROWS",
    "INSTANCE_SIZES",
    "LemmaCheck",
    "LemmaWitnesses",
    "classify",
    "indicator_row",
    "is_independent",
    "independence_dimension",
    "is_r_reduced",
    "is_r_i_reduced",
    "k_level",
    "lemma_witnesses",
    "min_equivalent_subsystem",
    "min_inconsistent_subsystem",
    "reduced_subset_i_check",
    "sauer_bound_check",
]

DEFAULT_CAP = 4

# (R, D, C, I) of the seven realizable classes, in row order
INDICATOR_ROWS = (
    (0, 0, 0, 0),
    (0, 0, 0, 1),
    (0, 1, 0, 0),
    (0, 1, 0, 1),
    (0, 1, 1, 0),
    (0, 1, 1, 1),
    (1, 1, 0, 1),
)

# instance sizes used when a canonical system is classified without an explicit n
INSTANCE_SIZES = {
    CanonicalKind.U1: 4,
    CanonicalKind.U2: 3,
    CanonicalKind.U3: 7,
    CanonicalKind.U4: 4,
    CanonicalKind.U5: 3,
    CanonicalKind.U6: 3,
    CanonicalKind.U7: 7,
}


def indicator_row(bits: Sequence[int]) -> Optional[int]:
    """1-based row of the indicator table, or None for an unrealizable vector."""
    bits = tuple(int(b) for b in bits)
    return INDICATOR_ROWS.index(bits) + 1 if bits in INDICATOR_ROWS else None


@dataclass
class ClassificationReport:
    name: str
    cap: int
    k_cap: int
    independence_dimension: int
    independence_witness: list[str]
    reduced_r: int
    reduced_witness: str
    i_reduced_r: int
    i_reduced_witness: Optional[str]
    k_level: Optional[int]
    indicator: dict[str, int]
    indicator_witness: dict[str, str]
    row: Optional[int]

    @property
    def bits(self) -> tuple[int, int, int, int]:
        return tuple(self.indicator[b] for b in "RDCI")

    def to_dict(self) -> dict:
        return {
            "system": self.name,
            "cap": self.cap,
            "k_cap": self.k_cap,
            "independence_dimension": {
                "value": self.independence_dimension,
                "witness": self.independence_witness,
            },
            "reduced": {"r": self.reduced_r, "witness": self.reduced_witness},
            "i_reduced": {"r": self.i_reduced_r, "witness": self.i_reduced_witness},
            "k_level": self.k_level if self.k_level is not None else f"exceeds {self.k_cap}",
            "indicator": {b: self.indicator[b] for b in "RDCI"},
            "indicator_witness": {b: self.indicator_witness[b] for b in "RDCI"},
            "row": self.row,
            "disclaimer": f"estimated on one finite instance; equation systems of at most {self.cap} equations",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def summary(self) -> str:
        k = self.k_level if self.k_level is not None else f">{self.k_cap}"
        bits = "".join(str(b) for b in self.bits)
        lines = [
            f"system {self.name}",
            f"  independence dimension  {self.independence_dimension}  {{{', '.join(self.independence_witness)}}}",
            f"  reduced at cap {self.cap}        r={self.reduced_r}  {self.reduced_witness}",
            f"  i-reduced at cap {self.cap}      r={self.i_reduced_r}  {self.i_reduced_witness or '-'}",
            f"  k-level                 {k}",
            f"  indicator (R,D,C,I)     {bits}  row {self.row if self.row else '-'}",
        ]
        return "\n".join(lines) + "\n"


def classify(
    system: InformationSystem,
    name: str = "table",
    cap: int = DEFAULT_CAP,
    k_cap: int = DEFAULT_K_CAP,
) -> ClassificationReport:
    """Measure a system and estimate its indicator bits.

    D is set when the independence dimension is at most 1, I when every
    minimal inconsistent system up to the cap has two equations, R when
    additionally every consistent system reduces to two equations, and C when
    D holds and the k-level is at most 2. The thresholds reproduce the known
    rows of the canonical systems at the instance sizes in ``INSTANCE_SIZES``.
    """
    if cap < 2:
        raise StructureError("cap must be at least 2")
    dim, dim_witness = independence_dimension(system)
    r, r_witness = reduced_number(system, cap)
    ri, ri_witness = i_reduced_number(system, cap)
    k = k_level(system, k_cap)
    d_bit = int(dim <= 1)
    i_bit = int(ri <= 2)
    r_bit = int(r <= 2 and i_bit and d_bit)
    c_bit = int(d_bit and k is not None and k <= 2)
    names = system.names
    witness = {
        "R": f"minimum equivalent subsystem of {r_witness.describe(system)} has {r} equations",
        "D": f"independent set {{{', '.join(names[a] for a in dim_witness)}}} of size {dim}",
        "C": f"k-level {k if k is not None else f'> {k_cap}'}",
        "I": (
            f"minimal inconsistent {ri_witness.describe(system)} of size {ri}"
            if ri_witness is not None
            else "no inconsistent system up to the cap"
        ),
    }
    bits = {"R": r_bit, "D": d_bit, "C": c_bit, "I": i_bit}
    return ClassificationReport(
        name=name,
        cap=cap,
        k_cap=k_cap,
        independence_dimension=dim,
        independence_witness=[names[a] for a in dim_witness],
        reduced_r=r,
        reduced_witness=r_witness.describe(system),
        i_reduced_r=ri,
        i_reduced_witness=None if ri_witness is None else ri_witness.describe(system),
        k_level=k,
        indicator=bits,
        indicator_witness=witness,
        row=indicator_row(tuple(bits[b] for b in "RDCI")),
    )


# --- inequalities ---------------------------------------------------------------


def sauer_bound_check(
    system: InformationSystem, problem: Problem, independence: Optional[int] = None, strict: bool = False
) -> bool:
    """|solution set| <= (4n)^I with I taken over all attributes of the system."""
    if independence is None:
        independence = independence_dimension(system)[0]
    count = len(solution_set(system, problem))
    ok = count <= (4 * problem.dim) ** independence
    if strict and not ok:
        raise CertificateViolation(
            f"{count} tuples exceed (4*{problem.dim})^{independence}"
        )
    return ok


def reduced_subset_i_check(system: InformationSystem, cap: int = DEFAULT_CAP) -> bool:
    """A system found r-reduced at the cap is (r+1)-i-reduced at the cap."""
    r, _ = reduced_number(system, cap)
    return is_r_i_reduced(system, r + 1, cap).holds


# --- canonical witnesses ------------------------------------------------------


@dataclass
class LemmaCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class LemmaWitnesses:
    kind: CanonicalKind
    n: int
    checks: list[LemmaCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(LemmaCheck(name, bool(passed), detail))


def _eqs(system: InformationSystem, pairs) -> EquationSystem:
    return EquationSystem(tuple((system.index_of(a), v) for a, v in pairs))


def _check_minimal_inconsistent(out: LemmaWitnesses, system, eqs: EquationSystem) -> None:
    out.add(
        "minimal inconsistent system",
        is_minimal_inconsistent(system, eqs),
        eqs.describe(system),
    )


def _check_complete_tree(out: LemmaWitnesses, system, prefix: str, d: int) -> None:
    pool = [a for a, name in enumerate(system.names) if name.startswith(prefix) and "_" not in name]
    tree = find_d_complete_tree(system, pool, d)
    out.add(
        f"{d}-complete tree over {prefix}-attributes",
        tree is not None and is_d_complete(system, tree, d),
    )


def lemma_witnesses(kind: CanonicalKind | str, n: Optional[int] = None, cap: int = DEFAULT_CAP) -> LemmaWitnesses:
    """Recheck the finite evidence behind the class of a canonical system."""
    if isinstance(kind, str):
        kind = CanonicalKind.parse(kind)
    n = INSTANCE_SIZES[kind] if n is None else n
    system = canonical_system(kind, n)
    out = LemmaWitnesses(kind, n)
    dim, _ = independence_dimension(system)

    if kind is CanonicalKind.U1:
        # f0 marks {1..n-1}; f_i marks the single element i
        def col(ones):
            return "c" + "".join("1" if j in ones else "0" for j in range(1, n + 1))

        pairs = [(col(set(range(1, n))), 1)] + [(col({i}), 0) for i in range(1, n)]
        _check_minimal_inconsistent(out, system, _eqs(system, pairs))
        out.add("independence dimension above 1", dim > 1, str(dim))
    elif kind is CanonicalKind.U2:
        out.add("2-i-reduced at cap", is_r_i_reduced(system, 2, cap).holds)
        out.add("independence dimension equals n", dim == n, str(dim))
    elif kind is CanonicalKind.U3:
        pairs = [(f"p{i}", 0) for i in range(1, n + 1)] + [(f"l{n}", 0)]
        _check_minimal_inconsistent(out, system, _eqs(system, pairs))
        _check_complete_tree(out, system, "l", int(math.log2(n + 1)))
        out.add("independence dimension 1", dim == 1, str(dim))
    elif kind is CanonicalKind.U4:
        out.add("2-i-reduced at cap", is_r_i_reduced(system, 2, cap).holds)
        s_n = _eqs(system, [(f"f1_{j}", 0) for j in range(1, n + 1)])
        target = solution_mask(system, s_n)
        eqs = list(s_n)
        proper_differ = all(
            solution_mask(system, eqs[:k] + eqs[k + 1 :]) != target for k in range(len(eqs))
        )
        out.add("non-reduced family consistent and irreducible", bool(target) and proper_differ, s_n.describe(system))
        _check_complete_tree(out, system, "f", int(math.log2(n + 1)))
        out.add("independence dimension 1", dim == 1, str(dim))
    elif kind is CanonicalKind.U5:
        pairs = [(f"f{n}", 1)] + [(f"f{n}_{j}", 0) for j in range(1, n + 1)]
        _check_minimal_inconsistent(out, system, _eqs(system, pairs))
        out.add("k-level 2", KLevels(system).level() == 2)
        out.add("independence dimension 1", dim == 1, str(dim))
    elif kind is CanonicalKind.U6:
        out.add("2-i-reduced at cap", is_r_i_reduced(system, 2, cap).holds)
        out.add("k-level 1", KLevels(system).level() == 1)
        out.add("independence dimension 1", dim == 1, str(dim))
    elif kind is CanonicalKind.U7:
        out.add("2-reduced at cap", is_r_reduced(system, 2, cap).holds)
        out.add("2-i-reduced at cap", is_r_i_reduced(system, 2, cap).holds)
        out.add("independence dimension 1", dim == 1, str(dim))

    if n == INSTANCE_SIZES[kind]:
        report = classify(system, str(kind), cap)
        out.add("indicator row", report.row == kind.value, f"row {report.row}")
    return out
