"""Minimum-depth decision trees that may ask attribute values or propose
whole answer tuples, over finite binary information systems."""

__version__ = "0.1.0"

from .canonical import CanonicalKind, canonical_system
from .classify import ClassificationReport, classify, lemma_witnesses, sauer_bound_check
from .errors import (
    BudgetExceeded,
    CertificateViolation,
    HyptreeError,
    ParseError,
    StructureError,
    UnsolvableError,
)
from .solver import DepthResult, ShannonRow, min_depth, oracle_min_depth, shannon_estimate, shannon_profile
from .strategies import (
    CompleteNode,
    ReducednessCertificate,
    certify_i_reduced,
    find_d_complete_tree,
    halving_proper,
    k_system_tree,
    lower_bound_h2,
    minimal_inconsistent_witness,
    sequential_proper,
    to_proper_only,
)
from .subsystems import (
    independence_dimension,
    is_independent,
    is_r_i_reduced,
    is_r_reduced,
    k_level,
    min_equivalent_subsystem,
    min_inconsistent_subsystem,
)
from .table import (
    EquationSystem,
    InformationSystem,
    Problem,
    TupleSet,
    parse_table,
    read_table,
    solution_set,
    write_table,
)
from .trees import (
    Attribute,
    Confirm,
    Counterexample,
    Hypothesis,
    Node,
    QueryModel,
    Terminal,
    depth,
    to_dot,
    trace,
    verify_solves,
)

__all__ = [
    "BudgetExceeded",
    "CertificateViolation",
    "HyptreeError",
    "ParseError",
    "StructureError",
    "UnsolvableError",
    "CompleteNode",
    "ReducednessCertificate",
    "certify_i_reduced",
    "find_d_complete_tree",
    "halving_proper",
    "k_system_tree",
    "lower_bound_h2",
    "minimal_inconsistent_witness",
    "sequential_proper",
    "to_proper_only",
    "independence_dimension",
    "is_independent",
    "is_r_i_reduced",
    "is_r_reduced",
    "k_level",
    "min_equivalent_subsystem",
    "min_inconsistent_subsystem",
    "EquationSystem",
    "InformationSystem",
    "Problem",
    "TupleSet",
    "parse_table",
    "read_table",
    "solution_set",
    "write_table",
    "Attribute",
    "Confirm",
    "Counterexample",
    "Hypothesis",
    "Node",
    "QueryModel",
    "Terminal",
    "depth",
    "to_dot",
    "trace",
    "verify_solves",
    "CanonicalKind",
    "canonical_system",
    "ClassificationReport",
    "classify",
    "lemma_witnesses",
    "sauer_bound_check",
    "DepthResult",
    "ShannonRow",
    "min_depth",
    "oracle_min_depth",
    "shannon_estimate",
    "shannon_profile",
]
