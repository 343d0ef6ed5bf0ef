from agnostic_hexagon.decisions.loss import *
from agnostic_hexagon.decisions.cutoff_test import *

__all__ = [
    "LossSpec",
    "CutoffPair",
    "cutoffs_from_loss",
    "expected_losses",
    "bayes_optimal_decision",
    "two_action_decision",
    "cutoff_test",
    "CutoffTest",
    "build_cutoff_test",
    "ConsonanceWitness",
    "consonance_failure_witness",
]
