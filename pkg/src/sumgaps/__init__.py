"""Workbench for subset-sum sets with prescribed complements.

Build exact finite subset-sum sets, inspect the gaps they leave, realize
sequences whose gap pattern starts with a chosen triple, and decide by
exhaustive search whether a given triple of first gaps is attainable at all.
"""

from .sumset import (
    DEFAULT_CAP_LIMIT,
    ElementSeq,
    ResourceError,
    SumSet,
    UsageError,
    add_element,
    brute_force_sumset,
    gaps,
    sumset_of,
)
from .structure import ChainReport, HeadReport, first_gaps, verify_chain, verify_head
from .construct import (
    ConstructionPlan,
    GapReport,
    InfeasibleBaseError,
    OutOfRangeError,
    PlanCase,
    UnsupportedB1Error,
    base_segment,
    derive_b,
    plan_construction,
    realize,
)
from .search import (
    CriticalOutcome,
    CriticalStatus,
    ExclusionTriple,
    OutcomeKind,
    SearchLimits,
    SearchOutcome,
    critical_b3,
    feasibility_search,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CAP_LIMIT",
    "ElementSeq",
    "SumSet",
    "UsageError",
    "ResourceError",
    "add_element",
    "brute_force_sumset",
    "gaps",
    "sumset_of",
    "ChainReport",
    "HeadReport",
    "first_gaps",
    "verify_chain",
    "verify_head",
    "ConstructionPlan",
    "GapReport",
    "InfeasibleBaseError",
    "OutOfRangeError",
    "PlanCase",
    "UnsupportedB1Error",
    "base_segment",
    "derive_b",
    "plan_construction",
    "realize",
    "CriticalOutcome",
    "CriticalStatus",
    "ExclusionTriple",
    "OutcomeKind",
    "SearchLimits",
    "SearchOutcome",
    "critical_b3",
    "feasibility_search",
]
