"""Constructive strategies and how close they get to their bounds."""

from hyptree import (
    QueryModel,
    ReducednessCertificate,
    canonical_system,
    certify_i_reduced,
    depth,
    halving_proper,
    k_system_tree,
    min_depth,
    sequential_proper,
    to_proper_only,
)

chain = canonical_system("u7", 10)
z = chain.problem()

# %% sequential proper hypotheses: never more than n questions
print("sequential", depth(sequential_proper(chain, z)), "of", z.dim)

# %% halving needs a reducedness certificate, checked up to a cap
cert = certify_i_reduced(chain, r=2, cap=3)
result = halving_proper(chain, z, cert)
print("halving", result.depth, "bound", round(result.bound, 2), "optimal", min_depth(chain, z, QueryModel.M4).depth)

# %% eliminating attribute queries can blow the depth up exponentially, not more
opt = min_depth(chain, z, QueryModel.M5, extract=True)
print("proper-only", depth(to_proper_only(chain, z, opt.tree)), "<=", 2**opt.depth - 1)

# %% k-level recursion on points: depth at most r * k = 2
points = canonical_system("u6", 6)
res = k_system_tree(points, points.problem(), ReducednessCertificate(2))
print("k-system", res.depth, "k", res.k, "bound", res.bound)
