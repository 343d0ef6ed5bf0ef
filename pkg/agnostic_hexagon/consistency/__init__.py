from agnostic_hexagon.consistency.sampler import *
from agnostic_hexagon.consistency.report import *
from agnostic_hexagon.consistency.checks import *
from agnostic_hexagon.consistency.region import *
from agnostic_hexagon.consistency.deduction import *

__all__ = [
    "CheckMode",
    "HypothesisSampler",
    "CheckResult",
    "ConsistencyReport",
    "check_invertibility",
    "check_monotonicity",
    "check_union_consonance",
    "check_intersection_consonance",
    "check_accepts_theta",
    "check_transitivity_chains",
    "check_invertibility_prism",
    "classify",
    "extract_region",
    "extract_region_by_intersection",
    "verify_representation",
    "check_nand_lemma",
    "check_nand_lemma_exhaustive",
    "deduce",
    "Deduction",
]
