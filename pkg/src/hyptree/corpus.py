"""Small tables for property runs: seeded random draws and exhaustive families."""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

import numpy as np

from .table import InformationSystem


def table_from_matrix(matrix) -> InformationSystem:
    matrix = np.asarray(matrix, dtype=np.uint8)
    elements = tuple(f"e{j}" for j in range(1, matrix.shape[0] + 1))
    names = tuple(f"f{i}" for i in range(1, matrix.shape[1] + 1))
    return InformationSystem(elements, names, matrix)


def random_table(
    rng: np.random.Generator, n: int, size: int, p: float = 0.5
) -> InformationSystem:
    return table_from_matrix((rng.random((size, n)) < p).astype(np.uint8))


def random_corpus(
    seed: int,
    count: int,
    n_range: tuple[int, int],
    size_range: tuple[int, int],
) -> Iterator[InformationSystem]:
    """``count`` tables with attribute count and universe size drawn uniformly."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        size = int(rng.integers(size_range[0], size_range[1] + 1))
        yield random_table(rng, n, size, float(rng.uniform(0.2, 0.8)))


def exhaustive_tables(max_n: int = 2, max_size: int = 5) -> Iterator[InformationSystem]:
    """Every table with at most ``max_size`` elements and ``max_n`` attributes,
    one per multiset of columns (tables that differ by a column permutation
    describe the same problem up to coordinate order)."""
    for size in range(1, max_size + 1):
        columns = list(itertools.product((0, 1), repeat=size))
        for n in range(1, max_n + 1):
            for combo in itertools.combinations_with_replacement(columns, n):
                yield table_from_matrix(np.array(combo, dtype=np.uint8).T)


def corpus_size(max_n: int = 2, max_size: int = 5) -> int:
    from math import comb

    return sum(comb(2**s + n - 1, n) for s in range(1, max_size + 1) for n in range(1, max_n + 1))


def first(tables, limit: Optional[int]) -> list[InformationSystem]:
    return list(itertools.islice(tables, limit))
