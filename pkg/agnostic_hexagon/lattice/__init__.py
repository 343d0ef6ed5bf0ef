from agnostic_hexagon.lattice.grid import *
from agnostic_hexagon.lattice.hypothesis import *
from agnostic_hexagon.lattice.agnostic_test import *

__all__ = [
    "GridPoint",
    "ParameterGrid",
    "Hypothesis",
    "complement",
    "family_union",
    "family_intersection",
    "nand",
    "enumerate_hypotheses",
    "random_hypothesis",
    "AgnosticTest",
    "ExplicitTableTest",
    "RegionTest",
    "RuleTest",
    "region_test_evaluate",
]
