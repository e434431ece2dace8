"""Worst-case depth over all problems of dimension at most n."""

from hyptree import QueryModel, canonical_system, shannon_profile

# %% thresholds l_i: attributes behave like binary search
chain = canonical_system("u7", 7)
for model in (QueryModel.M1, QueryModel.M4):
    rows = shannon_profile(chain, model, 7)
    print(model, [r.depth for r in rows])

# %% the full cube: nothing beats asking every coordinate
cube = canonical_system("u2", 4)
print([r.depth for r in shannon_profile(cube, QueryModel.M3, 4)])

# %% the argmax is a concrete hardest problem
row = shannon_profile(chain, QueryModel.M1, 7)[-1]
print(row.depth, [chain.names[a] for a in row.argmax])
