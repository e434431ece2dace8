"""Minimum depth of the same problem under the five query models."""

import numpy as np

from hyptree import QueryModel, canonical_system, min_depth, to_dot
from hyptree.corpus import table_from_matrix

# %% A toy table: four elements, three attributes
table = table_from_matrix(np.array([
    [0, 0, 1],
    [0, 1, 1],
    [1, 1, 0],
    [1, 0, 0],
]))
z = table.problem()
for model in QueryModel:
    print(model, min_depth(table, z, model).depth)

# %% Points on a line: asking attributes one at a time is slow,
# while a single hypothesis "x is none of 1..n" settles it
u6 = canonical_system("u6", 5)
print({str(m): min_depth(u6, u6.problem(), m).depth for m in QueryModel})

# %% The optimal tree itself, as Graphviz
best = min_depth(u6, u6.problem(), QueryModel.M4, extract=True)
print(to_dot(best.tree))
