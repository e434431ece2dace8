"""Equation-system measures of a finite information system.

Independence dimension, minimal equivalent and minimal inconsistent
subsystems, bounded r-reduced / r-i-reduced checks and the k-level.
Literals over a pool are numbered ``2 * position + value`` so that enumeration
order is pool order with value 0 first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import BudgetExceeded, StructureError
from .table import EquationSystem, InformationSystem, Literal, solution_mask

DEFAULT_NODE_BUDGET = 2_000_000


def _pool(system: InformationSystem, pool: Optional[Sequence[int]]) -> list[int]:
    if pool is None:
        return list(range(system.num_attributes))
    out = []
    for a in pool:
        system.check_attribute(a)
        if a not in out:
            out.append(a)
    return out


# --- independence -------------------------------------------------------------


def is_independent(system: InformationSystem, subset: Sequence[int]) -> bool:
    """Every 0/1 assignment to ``subset`` is realized by some element."""
    subset = list(subset)
    if len(set(subset)) != len(subset):
        return False
    if not subset:
        return True
    rows = {tuple(r) for r in system.matrix[:, subset].tolist()}
    return len(rows) == 2 ** len(subset)


def independence_dimension(
    system: InformationSystem,
    pool: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_NODE_BUDGET,
) -> tuple[int, tuple[int, ...]]:
    """Largest independent subset of ``pool`` and its size.

    Depth-first growth of independent sets (independence is hereditary) with
    the bound |independent set| <= log2(#distinct rows).
    """
    attrs = [a for a in _pool(system, pool) if not system.is_constant(a)]
    distinct = len({tuple(r) for r in system.matrix.tolist()})
    ceiling = distinct.bit_length() - 1
    best: tuple[int, ...] = ()
    visited = 0

    def grow(current: list[int], masks: list[int], start: int):
        nonlocal best, visited
        if len(current) > len(best):
            best = tuple(current)
        if len(best) >= ceiling:
            return
        for k in range(start, len(attrs)):
            if len(current) + (len(attrs) - k) <= len(best):
                return
            visited += 1
            if visited > budget:
                raise BudgetExceeded(f"independence search exceeded {budget} nodes")
            a = attrs[k]
            zero, one = system.literal_mask(a, 0), system.literal_mask(a, 1)
            split = [m & lit for m in masks for lit in (zero, one)]
            if all(split):
                grow(current + [a], split, k + 1)

    grow([], [system.universe_mask], 0)
    return len(best), best


# --- subsystem search ---------------------------------------------------------


def min_equivalent_subsystem(system: InformationSystem, equations: EquationSystem) -> EquationSystem:
    """A minimum-cardinality subsystem with the same solution set."""
    eqs = list(equations)
    target = solution_mask(system, eqs)
    if not target:
        raise StructureError("system is inconsistent")
    for k in range(len(eqs) + 1):
        for combo in itertools.combinations(eqs, k):
            if solution_mask(system, combo) == target:
                return EquationSystem(combo)
    raise AssertionError("unreachable")


def min_inconsistent_subsystem(
    system: InformationSystem, equations: EquationSystem, max_size: Optional[int] = None
) -> Optional[EquationSystem]:
    """A minimum-cardinality inconsistent subsystem.

    With ``max_size`` the search stops early and returns ``None`` when every
    inconsistent subsystem is larger.
    """
    eqs = list(equations)
    if solution_mask(system, eqs):
        raise StructureError("system is consistent")
    limit = len(eqs) if max_size is None else min(max_size, len(eqs))
    for k in range(1, limit + 1):
        for combo in itertools.combinations(eqs, k):
            if not solution_mask(system, combo):
                return EquationSystem(combo)
    return None


def is_minimal_inconsistent(system: InformationSystem, equations: EquationSystem) -> bool:
    eqs = list(equations)
    if solution_mask(system, eqs):
        return False
    return all(solution_mask(system, eqs[:k] + eqs[k + 1 :]) for k in range(len(eqs)))


class LiteralSpace:
    """Literals over an attribute pool with their element masks."""

    def __init__(self, system: InformationSystem, pool: Optional[Sequence[int]] = None):
        self.system = system
        self.pool = _pool(system, pool)
        self.literals: list[Literal] = [(a, v) for a in self.pool for v in (0, 1)]
        self.masks = [system.literal_mask(a, v) for a, v in self.literals]

    def system_of(self, idx: Sequence[int]) -> EquationSystem:
        return EquationSystem(tuple(self.literals[k] for k in idx))

    def mask_of(self, idx: Sequence[int]) -> int:
        mask = self.system.universe_mask
        for k in idx:
            mask &= self.masks[k]
        return mask

    def consistent_sets(self, cap: int, budget: int = DEFAULT_NODE_BUDGET) -> Iterator[tuple[tuple[int, ...], int]]:
        """Consistent literal sets of size <= cap with their solution masks."""
        visited = 0
        stack: list[tuple[tuple[int, ...], int]] = [((), self.system.universe_mask)]
        while stack:
            idx, mask = stack.pop()
            yield idx, mask
            if len(idx) == cap:
                continue
            start = idx[-1] + 1 if idx else 0
            for k in range(len(self.literals) - 1, start - 1, -1):
                m = mask & self.masks[k]
                if m:
                    visited += 1
                    if visited > budget:
                        raise BudgetExceeded(f"subsystem enumeration exceeded {budget} nodes")
                    stack.append((idx + (k,), m))

    def minimal_inconsistent(self, cap: int, budget: int = DEFAULT_NODE_BUDGET) -> Iterator[tuple[int, ...]]:
        """Minimal inconsistent literal sets of size <= cap.

        Every proper prefix of such a set is consistent, so extending each
        consistent set by one later literal reaches all of them.
        """
        for idx, mask in self.consistent_sets(cap - 1, budget):
            start = idx[-1] + 1 if idx else 0
            for k in range(start, len(self.literals)):
                if mask & self.masks[k]:
                    continue
                cand = idx + (k,)
                if all(self.mask_of(cand[:p] + cand[p + 1 :]) for p in range(len(cand))):
                    yield cand


@dataclass
class ReducednessCheck:
    """Outcome of a bounded universal check; ``witness`` refutes the claim."""

    holds: bool
    r: int
    cap: int
    witness: Optional[EquationSystem] = None


def is_r_reduced(
    system: InformationSystem,
    r: int,
    cap: int,
    pool: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_NODE_BUDGET,
) -> ReducednessCheck:
    """Every consistent system of at most ``cap`` equations has an equivalent
    subsystem of at most ``r`` equations."""
    space = LiteralSpace(system, pool)
    for idx, mask in space.consistent_sets(cap, budget):
        if len(idx) <= r:
            continue
        if not any(
            space.mask_of(sub) == mask
            for k in range(r + 1)
            for sub in itertools.combinations(idx, k)
        ):
            return ReducednessCheck(False, r, cap, space.system_of(idx))
    return ReducednessCheck(True, r, cap)


def is_r_i_reduced(
    system: InformationSystem,
    r: int,
    cap: int,
    pool: Optional[Sequence[int]] = None,
    budget: int = DEFAULT_NODE_BUDGET,
) -> ReducednessCheck:
    """Every inconsistent system of at most ``cap`` equations has an
    inconsistent subsystem of at most ``r`` equations."""
    space = LiteralSpace(system, pool)
    for idx in space.minimal_inconsistent(cap, budget):
        if len(idx) > r:
            return ReducednessCheck(False, r, cap, space.system_of(idx))
    return ReducednessCheck(True, r, cap)


def reduced_number(
    system: InformationSystem, cap: int, pool: Optional[Sequence[int]] = None, budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, EquationSystem]:
    """Smallest r for which the system is r-reduced on systems of <= cap equations,
    with a consistent system whose minimum equivalent subsystem has r equations."""
    space = LiteralSpace(system, pool)
    best, witness = 0, EquationSystem()
    for idx, mask in space.consistent_sets(cap, budget):
        if len(idx) <= best:
            continue
        need = next(
            k
            for k in range(len(idx) + 1)
            if any(space.mask_of(sub) == mask for sub in itertools.combinations(idx, k))
        )
        if need > best:
            best, witness = need, space.system_of(idx)
    return best, witness


def i_reduced_number(
    system: InformationSystem, cap: int, pool: Optional[Sequence[int]] = None, budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, Optional[EquationSystem]]:
    """Largest minimal inconsistent system of <= cap equations (the smallest r
    with r-i-reducedness at that cap) and one such system."""
    space = LiteralSpace(system, pool)
    best, witness = 0, None
    for idx in space.minimal_inconsistent(cap, budget):
        if len(idx) > best:
            best, witness = len(idx), space.system_of(idx)
    return best, witness


def largest_minimal_inconsistent(
    system: InformationSystem, pool: Optional[Sequence[int]] = None, cap: Optional[int] = None,
    budget: int = DEFAULT_NODE_BUDGET,
) -> Optional[EquationSystem]:
    """First (in literal order) minimal inconsistent system of maximum size.

    Such a system has at most as many equations as there are distinct rows,
    so the default cap makes the search exhaustive.
    """
    distinct = len({tuple(r) for r in system.matrix.tolist()})
    cap = distinct if cap is None else cap
    space = LiteralSpace(system, pool)
    best: Optional[tuple[int, ...]] = None
    for idx in space.minimal_inconsistent(cap, budget):
        if best is None or len(idx) > len(best) or (len(idx) == len(best) and idx < best):
            best = idx
    return None if best is None else space.system_of(best)


# --- k-level ------------------------------------------------------------------

DEFAULT_K_CAP = 6


class KLevels:
    """Memoized k-levels of the subsystems (E, F) for element masks E.

    level(E) = 0 when every attribute is constant on E, else
    1 + max over attributes f of min over values d of level(E with f = d).
    """

    def __init__(self, system: InformationSystem):
        self.system = system
        self.attrs = list(range(system.num_attributes))
        self.memo: dict[int, int] = {}

    def level(self, mask: Optional[int] = None) -> int:
        mask = self.system.universe_mask if mask is None else mask
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        worst = -1
        for a in self.attrs:
            lo = mask & self.system.literal_mask(a, 0)
            hi = mask & self.system.literal_mask(a, 1)
            if not lo or not hi:
                continue
            small, large = (lo, hi) if lo.bit_count() <= hi.bit_count() else (hi, lo)
            best = self.level(small)
            if best > worst:
                best = min(best, self.level(large))
            worst = max(worst, best)
        value = worst + 1
        self.memo[mask] = value
        return value


def k_level(system: InformationSystem, cap: int = DEFAULT_K_CAP, elements: Optional[int] = None) -> Optional[int]:
    """The k for which the (sub)system is a k-information system, or ``None``
    when it exceeds ``cap``."""
    value = KLevels(system).level(elements)
    return value if value <= cap else None
