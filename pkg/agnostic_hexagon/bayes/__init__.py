from agnostic_hexagon.bayes.model import *
from agnostic_hexagon.bayes.posterior import *

__all__ = [
    "DiscreteModel",
    "TabularModel",
    "BernoulliGridModel",
    "BinomialGridModel",
    "build_grid_model",
    "theta_grid",
    "Posterior",
    "posterior",
    "prob",
    "prior_prob",
]
