import logging
from typing import Optional, Sequence

import numpy as np

from agnostic_hexagon.bayes.posterior import Posterior
from agnostic_hexagon.config import ConfigurationError
from agnostic_hexagon.errors import EmptyHypothesisError, GridError
from agnostic_hexagon.lattice.grid import ParameterGrid
from agnostic_hexagon.lattice.hypothesis import Hypothesis

logger = logging.getLogger(__name__)

REFERENCES = ("from-grid", "uniform")


class SurpriseProfile:
    """Surprise s(θ|x) of every grid point.

    `tie_tolerance` τ makes dominance strict by a margin: θ1 dominates θ0
    when s(θ1) > s(θ0) + τ.
    """

    def __init__(self, grid: ParameterGrid, values: Sequence[float], tie_tolerance: float = 0.0):
        values = np.array(values, dtype=float)
        if values.shape != (grid.size,):
            raise GridError(f"Expected {grid.size} surprise values, got shape {values.shape}.")
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise GridError(f"Surprise values must be finite and non-negative, got {values.tolist()}.")
        if not np.any(values > 0):
            raise GridError("At least one surprise value must be positive.")
        if tie_tolerance < 0:
            raise GridError(f"The tie tolerance must be non-negative, got {tie_tolerance}.")
        if tie_tolerance > 0:
            logger.warning(f"Surprise values closer than {tie_tolerance} are treated as ties.")
        values.setflags(write=False)
        self.grid = grid
        self.values = values
        self.tie_tolerance = float(tie_tolerance)

    def __repr__(self):
        return f"SurpriseProfile({self.values.tolist()}, tie_tolerance={self.tie_tolerance})"


def surprise(
    posterior: Posterior,
    grid: Optional[ParameterGrid] = None,
    tie_tolerance: float = 0.0,
    reference: str = "from-grid",
) -> SurpriseProfile:
    """Posterior mass over reference weight, the weights taken from `grid` or uniform."""
    grid = grid or posterior.grid
    if grid.size != posterior.grid.size:
        raise GridError(
            f"Posterior over {posterior.grid.size} points used with a grid of {grid.size} points."
        )
    if reference == "from-grid":
        references = grid.references
    elif reference == "uniform":
        references = np.full(grid.size, 1.0 / grid.size)
    else:
        raise ConfigurationError(f"Unknown reference {reference!r}, available: {list(REFERENCES)}")
    return SurpriseProfile(grid, posterior.masses / references, tie_tolerance)


def tangent_set(profile: SurpriseProfile, hypothesis: Hypothesis) -> Hypothesis:
    """Points whose surprise strictly exceeds that of every point of H; T(∅) = Θ."""
    hypothesis.check_grid(profile.grid)
    members = list(hypothesis)
    values = profile.values
    dominating = np.all(
        values[:, np.newaxis] > values[members][np.newaxis, :] + profile.tie_tolerance, axis=1
    )
    return Hypothesis.from_bools(dominating)


def tangent_set_star(profile: SurpriseProfile, hypothesis: Hypothesis) -> Hypothesis:
    """Points whose surprise strictly exceeds the supremum of the surprise over H."""
    hypothesis.check_grid(profile.grid)
    if hypothesis.is_empty:
        raise EmptyHypothesisError("The supremum over an empty hypothesis is undefined.")
    supremum = profile.values[list(hypothesis)].max()
    return Hypothesis.from_bools(profile.values > supremum + profile.tie_tolerance)
