import logging
import math
from typing import Optional, Sequence

import numpy as np

from agnostic_hexagon.bayes.model import DiscreteModel
from agnostic_hexagon.errors import GridError, ZeroEvidenceError
from agnostic_hexagon.lattice.grid import PRIOR_TOLERANCE, ParameterGrid
from agnostic_hexagon.lattice.hypothesis import Hypothesis

logger = logging.getLogger(__name__)


class Posterior:
    """Posterior masses p(θ|x) over a grid."""

    def __init__(
        self,
        grid: ParameterGrid,
        masses: Sequence[float],
        observation: Optional[str] = None,
    ):
        masses = np.array(masses, dtype=float)
        if masses.shape != (grid.size,):
            raise GridError(f"Expected {grid.size} posterior masses, got shape {masses.shape}.")
        if (
            not np.all(np.isfinite(masses))
            or np.any(masses < 0)
            or np.any(masses > 1 + PRIOR_TOLERANCE)
        ):
            raise GridError(f"Posterior masses must lie in [0, 1], got {masses.tolist()}.")
        total = math.fsum(masses)
        if abs(total - 1.0) > PRIOR_TOLERANCE:
            raise GridError(f"Posterior masses must sum to 1, got {total}.")
        masses.setflags(write=False)
        self.grid = grid
        self.masses = masses
        self.observation = observation

    @classmethod
    def from_masses(
        cls, masses: Sequence[float], grid: Optional[ParameterGrid] = None
    ) -> "Posterior":
        """Posterior on `grid`, or on a uniform-prior grid t1..tn when none is given."""
        return cls(grid or ParameterGrid.uniform(len(masses)), masses)

    @property
    def mode(self) -> int:
        return int(np.argmax(self.masses))

    def prob(self, hypothesis: Hypothesis) -> float:
        return prob(self, hypothesis)

    def __repr__(self):
        return f"Posterior({self.masses.tolist()}, observation={self.observation!r})"


def posterior(model: DiscreteModel, observation: str) -> Posterior:
    likelihood = model.likelihood(observation)
    numerators = model.grid.priors * likelihood
    evidence = math.fsum(numerators)
    if evidence <= 0:
        raise ZeroEvidenceError(
            f"Observation {observation!r} has zero probability under every grid point with prior mass."
        )
    return Posterior(model.grid, numerators / evidence, observation=str(observation))


def _mass(values: np.ndarray, hypothesis: Hypothesis) -> float:
    if hypothesis.is_full:
        return 1.0
    # rounding in the normalisation can push a partial sum past 1
    return min(1.0, max(0.0, math.fsum(values[i] for i in hypothesis)))


def prob(posterior: Posterior, hypothesis: Hypothesis) -> float:
    """p(H|x); exactly 1 for Θ and exactly 0 for ∅."""
    hypothesis.check_grid(posterior.grid)
    return _mass(posterior.masses, hypothesis)


def prior_prob(grid: ParameterGrid, hypothesis: Hypothesis) -> float:
    hypothesis.check_grid(grid)
    return _mass(grid.priors, hypothesis)
