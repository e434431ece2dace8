"""Exact minimum depth of solving trees under the five query models."""

from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import BudgetExceeded, UnsolvableError
from .table import Bits, InformationSystem, Problem, solution_set
from .trees import Attribute, DecisionTree, Hypothesis, Node, Query, QueryModel, Terminal


def oracle_min_depth(
    system: InformationSystem, problem: Problem, model: QueryModel, d_max: int
) -> Optional[int]:
    """Smallest depth ``d <= d_max`` admitting a solving tree, else ``None``.

    Plain recursion over accumulated path words with no memo and no pruning of
    the hypothesis space; meant only as a test oracle for tiny instances.
    """
    full = solution_set(system, problem).members
    n = problem.dim
    candidates: list[list[tuple[tuple[int, int], ...]]] = []
    if model.attributes:
        for i in range(n):
            candidates.append([((i, 0),), ((i, 1),)])
    if model.hypotheses:
        pool = sorted(full) if model.proper else itertools.product((0, 1), repeat=n)
        for delta in pool:
            outcomes = [tuple(enumerate(delta))]
            outcomes += [((i, 1 - delta[i]),) for i in range(n)]
            candidates.append(outcomes)

    def survivors(word):
        return [t for t in full if all(t[i] == v for i, v in word)]

    def solvable(word, d):
        if len(survivors(word)) <= 1:
            return True
        if d == 0:
            return False
        return any(
            all(solvable(word + lits, d - 1) for lits in outcomes) for outcomes in candidates
        )

    for d in range(d_max + 1):
        if solvable((), d):
            return d
    return None


# --- memoized game search ---------------------------------------------------

INF = float("inf")


@dataclass
class SearchStats:
    nodes: int = 0
    memo_hits: int = 0
    time_ms: float = 0.0


@dataclass
class DepthResult:
    depth: int
    tree: Optional[DecisionTree]
    stats: SearchStats


class Game:
    """Adversary game over subsets of the full solution set.

    A state is a bitmask over ``tuples`` (the full solution set in sorted
    order). The memo maps a live mask to its exact game value.
    """

    def __init__(self, tuples: list[Bits], model: QueryModel, reduce_hypotheses: bool = True):
        self.tuples = tuples
        self.n = len(tuples[0])
        self.model = model
        self.reduce = reduce_hypotheses and not model.proper
        self.index = {t: k for k, t in enumerate(tuples)}
        self.full = (1 << len(tuples)) - 1
        self.coord = [
            tuple(sum(1 << k for k, t in enumerate(tuples) if t[i] == v) for v in (0, 1))
            for i in range(self.n)
        ]
        if model.hypotheses and not self.reduce:
            pool = tuples if model.proper else itertools.product((0, 1), repeat=self.n)
            self.hypotheses = [tuple(d) for d in pool]
        else:
            self.hypotheses = []
        self.memo: dict[int, int] = {}
        self.stats = SearchStats()

    @classmethod
    def for_problem(cls, system, problem, model, reduce_hypotheses=True):
        return cls(solution_set(system, problem).sorted(), model, reduce_hypotheses)

    # Each helper returns the query's value at ``live``; INF marks a query that
    # makes no progress (some nonempty answer leaves the state unchanged).

    def _attribute_value(self, live: int, i: int, bound: float) -> float:
        lo, hi = live & self.coord[i][0], live & self.coord[i][1]
        if not lo or not hi:
            return INF
        v = self.value(lo)
        if v + 1 >= bound:
            return INF
        return 1 + max(v, self.value(hi))

    def _branch_cost(self, live: int, i: int, v: int) -> float:
        """Value of the counterexample branch when the hypothesis has ``v`` at ``i``."""
        rest = live & self.coord[i][1 - v]
        if rest == live:
            return INF
        return self.value(rest) if rest else 0

    def _reduced_costs(self, live: int, bound: float) -> Optional[list[tuple[float, float]]]:
        costs = []
        for i in range(self.n):
            c0 = self._branch_cost(live, i, 0)
            if c0 == 0:
                costs.append((c0, INF))
                continue
            c1 = self._branch_cost(live, i, 1)
            if min(c0, c1) + 1 >= bound:
                return None
            costs.append((c0, c1))
        return costs

    def _hypothesis_value(self, live: int, delta: Bits, bound: float) -> float:
        worst = 0
        for i in range(self.n):
            c = self._branch_cost(live, i, delta[i])
            if c + 1 >= bound:
                return INF
            worst = max(worst, c)
        return 1 + worst

    def value(self, live: int) -> int:
        if live & (live - 1) == 0:
            return 0
        hit = self.memo.get(live)
        if hit is not None:
            self.stats.memo_hits += 1
            return hit
        self.stats.nodes += 1
        best = INF
        if self.model.attributes:
            for i in range(self.n):
                best = min(best, self._attribute_value(live, i, best))
                if best == 1:
                    break
        if best > 1 and self.model.hypotheses:
            if self.reduce:
                costs = self._reduced_costs(live, best)
                if costs is not None:
                    best = min(best, 1 + max(min(c) for c in costs))
            else:
                for delta in self.hypotheses:
                    best = min(best, self._hypothesis_value(live, delta, best))
                    if best == 1:
                        break
        if best == INF:
            raise UnsolvableError(f"no progressing query for live set {live:#x} under {self.model}")
        self.memo[live] = int(best)
        return int(best)

    # --- extraction ---

    def best_query(self, live: int) -> Query:
        """First query in canonical order achieving the game value."""
        target = self.value(live)
        if self.model.attributes:
            for i in range(self.n):
                if self._attribute_value(live, i, INF) == target:
                    return Attribute(i)
        if self.reduce:
            costs = self._reduced_costs(live, INF)
            return Hypothesis(tuple(0 if c0 <= target - 1 else 1 for c0, _ in costs))
        for delta in self.hypotheses:
            if self._hypothesis_value(live, delta, INF) == target:
                return Hypothesis(delta)
        raise UnsolvableError("game value not attained")  # unreachable

    def tree(self, live: Optional[int] = None, fallback: Optional[Bits] = None) -> DecisionTree:
        live = self.full if live is None else live
        if live & (live - 1) == 0:
            if live:
                return Terminal(self.tuples[live.bit_length() - 1])
            return Terminal(fallback if fallback is not None else (0,) * self.n)
        q = self.best_query(live)
        if isinstance(q, Attribute):
            i = q.index
            kids = [
                self.tree(live & self.coord[i][v], tuple(v if k == i else 0 for k in range(self.n)))
                for v in (0, 1)
            ]
            return Node(q, tuple(kids))
        delta = q.values
        confirm = live & (1 << self.index[delta]) if delta in self.index else 0
        kids = [self.tree(confirm, delta)]
        for i in range(self.n):
            flipped = tuple(1 - b if k == i else b for k, b in enumerate(delta))
            kids.append(self.tree(live & self.coord[i][1 - delta[i]], flipped))
        return Node(q, tuple(kids))


def min_depth(
    system: InformationSystem,
    problem: Problem,
    model: QueryModel,
    extract: bool = False,
    reduce_hypotheses: bool = True,
) -> DepthResult:
    """Minimum depth of a tree solving ``problem`` with the queries ``model`` allows.

    ``reduce_hypotheses=False`` enumerates all 2^n hypotheses for M2/M3
    instead of choosing each coordinate independently.
    """
    start = time.perf_counter()
    game = Game.for_problem(system, problem, model, reduce_hypotheses)
    value = game.value(game.full)
    tree = game.tree() if extract else None
    game.stats.time_ms = (time.perf_counter() - start) * 1000.0
    return DepthResult(value, tree, game.stats)


# --- Shannon function ---------------------------------------------------------

DEFAULT_BUDGET = 200_000


def default_budget() -> int:
    return int(os.environ.get("HYPTREE_BUDGET", DEFAULT_BUDGET))


@dataclass
class ShannonRow:
    """Worst-case minimum depth over problems of dimension at most ``n``."""

    n: int
    model: QueryModel
    depth: int
    argmax: tuple[int, ...]


def _iso_key(system: InformationSystem, attrs: tuple[int, ...]) -> tuple:
    # Problems whose solution sets coincide after sorting coordinates by column
    # content are isomorphic, so they share a game value.
    order = sorted(range(len(attrs)), key=lambda c: system.matrix[:, attrs[c]].tobytes())
    cols = system.matrix[:, [attrs[c] for c in order]]
    return (len(attrs), np.unique(cols, axis=0).tobytes())


def shannon_profile(
    system: InformationSystem,
    model: QueryModel,
    n_max: int,
    pool: Optional[list[int]] = None,
    budget: Optional[int] = None,
    threads: int = 1,
) -> list[ShannonRow]:
    """Rows for n = 1..n_max of the Shannon function estimate.

    Problems are attribute subsets of ``pool`` taken in pool order; permuting or
    repeating attributes cannot change a minimum depth.
    """
    pool = list(range(system.num_attributes)) if pool is None else list(pool)
    n_max = min(n_max, len(pool))
    budget = default_budget() if budget is None else budget
    total = sum(math.comb(len(pool), k) for k in range(1, n_max + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} problems exceed the budget of {budget}")
    problems = [
        tuple(c) for k in range(1, n_max + 1) for c in itertools.combinations(pool, k)
    ]
    cache: dict[tuple, int] = {}

    def solve(attrs: tuple[int, ...]) -> int:
        key = _iso_key(system, attrs)
        hit = cache.get(key)
        if hit is None:
            hit = min_depth(system, Problem(system, attrs), model).depth
            cache.setdefault(key, hit)
        return hit

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            values = list(ex.map(solve, problems, chunksize=64))
    else:
        values = [solve(p) for p in problems]

    rows = []
    best, arg = -1, ()
    k = 0
    for n in range(1, n_max + 1):
        while k < len(problems) and len(problems[k]) == n:
            if values[k] > best:
                best, arg = values[k], problems[k]
            k += 1
        rows.append(ShannonRow(n, model, best, arg))
    return rows


def shannon_estimate(
    system: InformationSystem,
    model: QueryModel,
    n: int,
    pool: Optional[list[int]] = None,
    budget: Optional[int] = None,
) -> ShannonRow:
    return shannon_profile(system, model, n, pool, budget)[-1]
