"""Tree constructions that carry a provable depth guarantee.

Every builder works on element subsets of the universe (bitmasks), so a
recursive call on a restricted subsystem is the same call with a smaller mask.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import CertificateViolation, StructureError
from .subsystems import (
    KLevels,
    independence_dimension,
    is_r_i_reduced,
    largest_minimal_inconsistent,
)
from .table import (
    Bits,
    EquationSystem,
    InformationSystem,
    Problem,
    mask_elements,
    solution_mask,
    solution_set,
)
from .trees import (
    DecisionTree,
    Hypothesis,
    Node,
    QueryModel,
    Terminal,
    answer_literals,
    answers,
    attribute_node,
    depth,
    hypothesis_node,
    verify_solves,
)


@dataclass
class ReducednessCertificate:
    """A reducedness claim checked on systems of at most ``cap`` equations."""

    r: int
    kind: str = "i-reduced"
    cap: int = 0
    pool: Optional[tuple[int, ...]] = None
    witnesses: list[EquationSystem] = field(default_factory=list)

    def __post_init__(self):
        if self.r < 1:
            raise StructureError("certificate needs r >= 1")
        if self.kind not in ("reduced", "i-reduced"):
            raise StructureError(f"unknown certificate kind {self.kind!r}")


def certify_i_reduced(
    system: InformationSystem, r: int, cap: int, pool: Optional[Sequence[int]] = None
) -> ReducednessCertificate:
    """Check r-i-reducedness up to ``cap`` equations; raise if it fails."""
    check = is_r_i_reduced(system, r, cap, pool)
    if not check.holds:
        raise CertificateViolation(
            f"not {r}-i-reduced: {check.witness.describe(system)} has no inconsistent "
            f"subsystem of at most {r} equations"
        )
    return ReducednessCertificate(r, "i-reduced", cap, None if pool is None else tuple(pool))


class _Context:
    """Row lookup for a problem: tuple of each element and coordinate masks."""

    def __init__(self, system: InformationSystem, problem: Problem):
        self.system = system
        self.problem = problem
        self.n = problem.dim
        self.rows = [problem.value(j) for j in range(system.size)]
        self.full = solution_set(system, problem).members

    def delta(self, mask: int) -> set[Bits]:
        return {self.rows[j] for j in mask_elements(mask)}

    def coord(self, i: int, v: int) -> int:
        return self.problem.coordinate_mask(i, v)


def _flip(values: Bits, i: int) -> Bits:
    return tuple(1 - b if k == i else b for k, b in enumerate(values))


def _terminal(ctx: _Context, mask: int, fallback: Bits) -> Terminal:
    delta = ctx.delta(mask)
    return Terminal(next(iter(delta)) if len(delta) == 1 else fallback)


# --- sequential proper hypotheses -----------------------------------------------


def sequential_proper(system: InformationSystem, problem: Problem) -> DecisionTree:
    """Proper hypotheses only: each query agrees with every counterexample
    received on its path. Depth is at most n."""
    ctx = _Context(system, problem)

    def build(mask: int, fallback: Bits) -> DecisionTree:
        delta = ctx.delta(mask)
        if len(delta) <= 1:
            return _terminal(ctx, mask, fallback)
        values = min(delta)
        kids = [build(mask & ctx.coord(i, 1 - values[i]), _flip(values, i)) for i in range(ctx.n)]
        return hypothesis_node(values, Terminal(values), kids)

    return build(system.universe_mask, (0,) * ctx.n)


# --- halving with proper hypotheses ---------------------------------------------


@dataclass
class HalvingResult:
    tree: DecisionTree
    depth: int
    bound: float
    independence: int
    r: int


def halving_bound(r: int, independence: int, n: int) -> float:
    return r * independence * math.log(4 * n)


def halving_proper(
    system: InformationSystem,
    problem: Problem,
    cert: ReducednessCertificate,
    independence: Optional[int] = None,
) -> HalvingResult:
    """Halving over proper hypotheses for an r-i-reduced system (r >= 2).

    At each state the majority tuple is asked when it is realized in the
    current subsystem; otherwise the equations on unbalanced coordinates are
    solved and the row of their first solution is asked.
    """
    if cert.kind != "i-reduced":
        raise StructureError("halving needs an i-reduced certificate")
    if cert.r < 2:
        raise StructureError("halving needs r >= 2")
    r = cert.r
    ctx = _Context(system, problem)
    if independence is None:
        independence = independence_dimension(system)[0]

    def build(mask: int, fallback: Bits) -> DecisionTree:
        delta = ctx.delta(mask)
        if len(delta) <= 1:
            return _terminal(ctx, mask, fallback)
        size = len(delta)
        major = []
        minority = []
        for i in range(ctx.n):
            ones = sum(t[i] for t in delta)
            d = 0 if size - ones >= ones else 1
            major.append(d)
            minority.append(size - ones if d == 1 else ones)
        major = tuple(major)
        if major in delta:
            query = major
        else:
            unbalanced = [i for i in range(ctx.n) if minority[i] * r < size]
            sub = mask & solution_mask(system, [(problem.indices[i], major[i]) for i in unbalanced])
            if not sub:
                raise CertificateViolation(
                    "equations on unbalanced coordinates are inconsistent; "
                    f"the system is not {r}-i-reduced"
                )
            query = ctx.rows[next(mask_elements(sub))]
        kids = [build(mask & ctx.coord(i, 1 - query[i]), _flip(query, i)) for i in range(ctx.n)]
        return hypothesis_node(query, Terminal(query), kids)

    tree = build(system.universe_mask, (0,) * ctx.n)
    return HalvingResult(tree, depth(tree), halving_bound(r, independence, ctx.n), independence, r)


# --- attribute elimination (M5 -> M4) -----------------------------------------------


def to_proper_only(system: InformationSystem, problem: Problem, tree: DecisionTree) -> DecisionTree:
    """Rewrite a tree over attributes and proper hypotheses into one that
    asks proper hypotheses only, with depth at most 2^depth - 1."""
    if not verify_solves(system, problem, tree, QueryModel.M5):
        raise StructureError("input tree does not solve the problem with attributes and proper hypotheses")
    ctx = _Context(system, problem)

    def path_mask(mask: int, steps) -> int:
        for q, a in steps:
            for i, v in answer_literals(q, a):
                mask &= ctx.coord(i, v)
        return mask

    def graft(base: DecisionTree, top: DecisionTree) -> DecisionTree:
        # base's terminals are replaced by copies of top; remember base labels
        if isinstance(base, Terminal):
            return _Tagged(top, base.label)
        return Node(base.query, tuple(graft(c, top) for c in base.children))

    def disambiguate(t: DecisionTree, mask: int, steps: list, first: Optional[Bits]) -> DecisionTree:
        if isinstance(t, _Tagged):
            return disambiguate(t.tree, mask, steps, t.label)
        if isinstance(t, Node):
            kids = [
                disambiguate(c, mask, steps + [(t.query, a)], first)
                for a, c in zip(answers(t.query), t.children)
            ]
            return Node(t.query, tuple(kids))
        if not path_mask(mask, steps):
            return t
        delta = ctx.delta(mask)
        second = t.label
        asked, other = (first, second) if first in delta else (second, first)
        return hypothesis_node(asked, Terminal(asked), [Terminal(other)] * ctx.n)

    def transform(t: DecisionTree, mask: int) -> DecisionTree:
        if isinstance(t, Terminal):
            return t
        q = t.query
        if isinstance(q, Hypothesis):
            kids = [Terminal(q.values)]
            for i, sub in enumerate(t.children[1:]):
                kids.append(transform(sub, mask & ctx.coord(i, 1 - q.values[i])))
            return Node(q, tuple(kids))
        i = q.index
        low = transform(t.children[0], mask & ctx.coord(i, 0))
        high = transform(t.children[1], mask & ctx.coord(i, 1))
        return disambiguate(graft(low, high), mask, [], None)

    return transform(tree, system.universe_mask)


@dataclass(frozen=True)
class _Tagged:
    tree: DecisionTree
    label: Bits


# --- k-level construction (attributes + proper hypotheses) ---------------------


@dataclass
class KSystemResult:
    tree: DecisionTree
    depth: int
    k: int
    r: int

    @property
    def bound(self) -> int:
        return self.r * self.k


def k_system_tree(
    system: InformationSystem,
    problem: Problem,
    cert: ReducednessCertificate,
    k_cap: int = 6,
) -> KSystemResult:
    """Recursive construction over k-levels with depth at most r * k."""
    if cert.kind != "i-reduced":
        raise StructureError("the construction needs an i-reduced certificate")
    levels = KLevels(system)
    k = levels.level()
    if k > k_cap:
        raise CertificateViolation(f"k-level {k} exceeds the cap {k_cap}")
    ctx = _Context(system, problem)
    r = cert.r

    def build(mask: int, fallback: Bits) -> DecisionTree:
        delta = ctx.delta(mask)
        if len(delta) <= 1:
            return _terminal(ctx, mask, fallback)
        here = levels.level(mask)
        values = []
        for i in range(ctx.n):
            for d in (0, 1):
                if levels.level(mask & ctx.coord(i, 1 - d)) < here:
                    values.append(d)
                    break
            else:
                raise CertificateViolation("no value lowers the k-level")  # excluded by definition
        values = tuple(values)
        branches = {}

        def branch(i: int) -> DecisionTree:
            if i not in branches:
                branches[i] = build(mask & ctx.coord(i, 1 - values[i]), _flip(values, i))
            return branches[i]

        if values in delta:
            return hypothesis_node(values, Terminal(values), [branch(i) for i in range(ctx.n)])
        core = _min_inconsistent_coords(ctx, mask, values, r)
        if core is None:
            raise CertificateViolation(
                f"hypothesis {values} has no inconsistent subsystem of at most {r} equations"
            )

        def cascade(pos: int) -> DecisionTree:
            # the path agreeing with every equation of the core has no solutions
            if pos == len(core):
                return Terminal((0,) * ctx.n)
            i = core[pos]
            kids = [cascade(pos + 1) if v == values[i] else branch(i) for v in (0, 1)]
            return attribute_node(i, kids[0], kids[1])

        return cascade(0)

    tree = build(system.universe_mask, (0,) * ctx.n)
    return KSystemResult(tree, depth(tree), k, r)


def _min_inconsistent_coords(ctx: _Context, mask: int, values: Bits, r: int) -> Optional[tuple[int, ...]]:
    """Smallest set of coordinates (at most r) whose equations have no solution in ``mask``."""
    for size in range(1, min(r, ctx.n) + 1):
        for combo in itertools.combinations(range(ctx.n), size):
            m = mask
            for i in combo:
                m &= ctx.coord(i, values[i])
            if not m:
                return combo
    return None


# --- d-complete trees and lower bounds ------------------------------------------


@dataclass(frozen=True)
class CompleteNode:
    """Attribute node of a d-complete tree; ``None`` children are unlabeled leaves."""

    attribute: int
    low: Optional["CompleteNode"]
    high: Optional["CompleteNode"]

    @property
    def depth(self) -> int:
        return 1 + max(c.depth if c else 0 for c in (self.low, self.high))

    def attributes(self) -> set[int]:
        out = {self.attribute}
        for c in (self.low, self.high):
            if c:
                out |= c.attributes()
        return out

    def paths(self):
        for v, c in ((0, self.low), (1, self.high)):
            if c is None:
                yield [(self.attribute, v)]
            else:
                for p in c.paths():
                    yield [(self.attribute, v)] + p


def is_d_complete(system: InformationSystem, tree: CompleteNode, d: int) -> bool:
    return all(len(p) == d and solution_mask(system, p) for p in tree.paths())


def find_d_complete_tree(
    system: InformationSystem, pool: Optional[Sequence[int]], d: int
) -> Optional[CompleteNode]:
    """Backtracking search, attributes in pool order, memoized on (elements, depth)."""
    if d < 1:
        raise StructureError("d must be at least 1")
    pool = list(range(system.num_attributes)) if pool is None else list(pool)
    memo: dict[tuple[int, int], Optional[CompleteNode]] = {}

    def search(mask: int, m: int) -> Optional[CompleteNode]:
        key = (mask, m)
        if key in memo:
            return memo[key]
        found = None
        for a in pool:
            lo = mask & system.literal_mask(a, 0)
            hi = mask & system.literal_mask(a, 1)
            if not lo or not hi:
                continue
            if m == 1:
                found = CompleteNode(a, None, None)
                break
            left = search(lo, m - 1)
            if left is None:
                continue
            right = search(hi, m - 1)
            if right is not None:
                found = CompleteNode(a, left, right)
                break
        memo[key] = found
        return found

    return search(system.universe_mask, d)


def lower_bound_h2(system: InformationSystem, problem: Problem, tree: CompleteNode) -> int:
    """Depth of a d-complete tree whose attributes all occur in the problem."""
    if not tree.attributes() <= set(problem.indices):
        raise StructureError("the complete tree uses attributes outside the problem")
    d = tree.depth
    if not is_d_complete(system, tree, d):
        raise StructureError("tree is not d-complete")
    return d


def minimal_inconsistent_witness(
    system: InformationSystem, pool: Optional[Sequence[int]] = None, cap: Optional[int] = None
) -> Optional[tuple[EquationSystem, Problem]]:
    """A largest inconsistent system whose proper subsystems are all consistent,
    with the problem formed by its attributes."""
    found = largest_minimal_inconsistent(system, pool, cap)
    if found is None:
        return None
    return found, Problem(system, found.attributes())
