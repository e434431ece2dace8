"""Estimated indicator vectors for the seven canonical systems."""

from hyptree import CanonicalKind, canonical_system, classify
from hyptree.classify import INSTANCE_SIZES, lemma_witnesses

for kind in CanonicalKind:
    n = INSTANCE_SIZES[kind]
    report = classify(canonical_system(kind, n), f"{kind}({n})")
    print(f"{report.name:6s} bits={report.bits} row={report.row}")

# %% the evidence behind one row
print(classify(canonical_system("u3", 7), "u3(7)").summary())
for check in lemma_witnesses("u3").checks:
    print(check.passed, check.name, check.detail)
