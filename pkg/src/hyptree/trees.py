"""Queries, answers and decision trees over a problem, with their semantics.

A working node stores its children in the canonical answer order returned by
:func:`answers`: ``(0, 1)`` for an attribute query and
``(Confirm, Counterexample(0), ..., Counterexample(n-1))`` for a hypothesis.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import StructureError
from .table import Bits, InformationSystem, Literal, Problem, bitstring, solution_set


@dataclass(frozen=True)
class Attribute:
    index: int


@dataclass(frozen=True)
class Hypothesis:
    values: Bits

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))


Query = Union[Attribute, Hypothesis]


@dataclass(frozen=True)
class AttrValue:
    index: int
    value: int


@dataclass(frozen=True)
class Confirm:
    pass


@dataclass(frozen=True)
class Counterexample:
    """Coordinate ``index`` differs from the hypothesis at that coordinate."""

    index: int


Answer = Union[AttrValue, Confirm, Counterexample]


def answers(query: Query) -> tuple[Answer, ...]:
    if isinstance(query, Attribute):
        return (AttrValue(query.index, 0), AttrValue(query.index, 1))
    n = len(query.values)
    return (Confirm(),) + tuple(Counterexample(i) for i in range(n))


def answer_literals(query: Query, answer: Answer) -> tuple[Literal, ...]:
    """The equation system attached to the edge, as (coordinate, value) pairs."""
    if isinstance(query, Attribute):
        if not isinstance(answer, AttrValue) or answer.index != query.index:
            raise StructureError(f"{answer} does not answer {query}")
        return ((answer.index, answer.value),)
    if isinstance(answer, Confirm):
        return tuple(enumerate(query.values))
    if isinstance(answer, Counterexample):
        if not 0 <= answer.index < len(query.values):
            raise StructureError(f"{answer} out of range for {query}")
        return ((answer.index, 1 - query.values[answer.index]),)
    raise StructureError(f"{answer} does not answer {query}")


@dataclass(frozen=True)
class Terminal:
    label: Bits

    def __post_init__(self):
        object.__setattr__(self, "label", tuple(int(v) for v in self.label))


@dataclass(frozen=True)
class Node:
    query: Query
    children: tuple["DecisionTree", ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))

    def branches(self) -> Iterator[tuple[Answer, "DecisionTree"]]:
        return zip(answers(self.query), self.children)

    def child(self, answer: Answer) -> "DecisionTree":
        for a, sub in self.branches():
            if a == answer:
                return sub
        raise StructureError(f"{answer} is not an answer of {self.query}")


DecisionTree = Union[Terminal, Node]


def attribute_node(index: int, low: DecisionTree, high: DecisionTree) -> Node:
    return Node(Attribute(index), (low, high))


def hypothesis_node(values: Bits, confirm: DecisionTree, counter: list[DecisionTree]) -> Node:
    return Node(Hypothesis(values), (confirm, *counter))


class QueryModel(enum.Enum):
    """Which queries a tree may use: M1 attributes, M2 hypotheses, M3 both,
    M4 proper hypotheses, M5 attributes and proper hypotheses."""

    M1 = 1
    M2 = 2
    M3 = 3
    M4 = 4
    M5 = 5

    @property
    def attributes(self) -> bool:
        return self in (QueryModel.M1, QueryModel.M3, QueryModel.M5)

    @property
    def hypotheses(self) -> bool:
        return self is not QueryModel.M1

    @property
    def proper(self) -> bool:
        return self in (QueryModel.M4, QueryModel.M5)

    @classmethod
    def parse(cls, text: str) -> "QueryModel":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise StructureError(f"unknown query model {text!r}") from None

    def __str__(self):
        return self.name.lower()


# --- structure --------------------------------------------------------------


def check_structure(tree: DecisionTree, n: int) -> None:
    """Raise :class:`StructureError` unless ``tree`` is a well-formed tree over width ``n``."""
    stack = [tree]
    while stack:
        t = stack.pop()
        if isinstance(t, Terminal):
            if len(t.label) != n or any(v not in (0, 1) for v in t.label):
                raise StructureError(f"terminal label {t.label} is not an {n}-tuple")
            continue
        if not isinstance(t, Node):
            raise StructureError(f"not a tree node: {t!r}")
        q = t.query
        if isinstance(q, Attribute):
            if not 0 <= q.index < n:
                raise StructureError(f"attribute coordinate {q.index} out of range")
            expected = 2
        elif isinstance(q, Hypothesis):
            if len(q.values) != n or any(v not in (0, 1) for v in q.values):
                raise StructureError(f"hypothesis {q.values} is not an {n}-tuple")
            expected = n + 1
        else:
            raise StructureError(f"not a query: {q!r}")
        if len(t.children) != expected:
            raise StructureError(f"{q} needs {expected} children, got {len(t.children)}")
        stack.extend(t.children)


def depth(tree: DecisionTree) -> int:
    """Maximum number of working nodes on a root-to-terminal path."""
    if isinstance(tree, Terminal):
        return 0
    return 1 + max(depth(c) for c in tree.children)


def size(tree: DecisionTree) -> int:
    if isinstance(tree, Terminal):
        return 1
    return 1 + sum(size(c) for c in tree.children)


def queries(tree: DecisionTree) -> Iterator[Query]:
    if isinstance(tree, Node):
        yield tree.query
        for c in tree.children:
            yield from queries(c)


Step = tuple[Query, Answer]


def complete_paths(tree: DecisionTree) -> Iterator[tuple[list[Step], Terminal]]:
    """Every root-to-terminal path as its (query, answer) steps and the terminal."""
    if isinstance(tree, Terminal):
        yield [], tree
        return
    for a, sub in tree.branches():
        for steps, leaf in complete_paths(sub):
            yield [(tree.query, a), *steps], leaf


def path_word(steps: list[Step]) -> tuple[Literal, ...]:
    """Concatenated edge literals of a path (empty for a bare terminal)."""
    word: list[Literal] = []
    for q, a in steps:
        word.extend(answer_literals(q, a))
    return tuple(word)


def is_legal(query: Query, model: QueryModel, proper: frozenset[Bits] | set[Bits]) -> bool:
    if isinstance(query, Attribute):
        return model.attributes
    if not model.hypotheses:
        return False
    return not model.proper or query.values in proper


def verify_solves(
    system: InformationSystem, problem: Problem, tree: DecisionTree, model: QueryModel
) -> bool:
    """True when every query is legal under ``model`` and every complete path
    leaves at most one possible tuple, equal to its terminal label."""
    check_structure(tree, problem.dim)
    full = solution_set(system, problem).members

    def walk(t: DecisionTree, live: frozenset[Bits]) -> bool:
        if isinstance(t, Terminal):
            if len(live) > 1:
                return False
            return not live or next(iter(live)) == t.label
        if not is_legal(t.query, model, full):
            return False
        for a, sub in t.branches():
            lits = answer_literals(t.query, a)
            rest = frozenset(s for s in live if all(s[i] == v for i, v in lits))
            if not walk(sub, rest):
                return False
        return True

    return walk(tree, full)


def trace(
    system: InformationSystem, problem: Problem, tree: DecisionTree, element: str | int
) -> set[Bits]:
    """Labels of all terminals whose path equations the element satisfies."""
    check_structure(tree, problem.dim)
    value = problem.value(system.element_index(element))
    labels: set[Bits] = set()
    stack = [tree]
    while stack:
        t = stack.pop()
        if isinstance(t, Terminal):
            labels.add(t.label)
            continue
        for a, sub in t.branches():
            if all(value[i] == v for i, v in answer_literals(t.query, a)):
                stack.append(sub)
    return labels


# --- DOT export ---------------------------------------------------------------


def _node_label(t: DecisionTree) -> str:
    if isinstance(t, Terminal):
        return bitstring(t.label)
    if isinstance(t.query, Attribute):
        return f"f{t.query.index + 1}"
    return f"H={bitstring(t.query.values)}"


def _edge_label(q: Query, a: Answer) -> str:
    if isinstance(a, AttrValue):
        return f"f{a.index + 1}={a.value}"
    if isinstance(a, Confirm):
        return "yes"
    return f"f{a.index + 1}!={q.values[a.index]}"


def to_dot(tree: DecisionTree, name: str = "tree") -> str:
    """Graphviz rendering with preorder node numbering; coordinates print 1-based."""
    nodes: list[str] = []
    edges: list[str] = []
    counter = 0

    def visit(t: DecisionTree) -> int:
        nonlocal counter
        me = counter
        counter += 1
        shape = "box" if isinstance(t, Terminal) else "ellipse"
        nodes.append(f'  n{me} [label="{_node_label(t)}", shape={shape}];')
        if isinstance(t, Node):
            for a, sub in t.branches():
                child = visit(sub)
                edges.append(f'  n{me} -> n{child} [label="{_edge_label(t.query, a)}"];')
        return me

    visit(tree)
    return "\n".join([f"digraph {name} {{", *nodes, *edges, "}"]) + "\n"
