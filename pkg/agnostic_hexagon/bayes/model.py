import logging
import re
from typing import Dict, List, Optional, Union

import numpy as np
from scipy.stats import binom

from agnostic_hexagon.config import ConfigurationError, Params, Registrable
from agnostic_hexagon.config.from_params import normalize_params
from agnostic_hexagon.errors import GridError, ObservationError
from agnostic_hexagon.lattice.grid import GridPoint, ParameterGrid

logger = logging.getLogger(__name__)


class DiscreteModel(Registrable):
    """Prior grid and likelihood p(x|θ), keyed by an observation string.

    In configuration files the family may be given either as `type` or as
    `family` (e.g. "binomial-grid"); dashes and underscores are interchangeable.
    """

    default_implementation = "tabular"

    def __init__(self, grid: ParameterGrid):
        self.grid = grid

    @classmethod
    def from_params(cls, params: Union[Params, Dict, str], **extras) -> "DiscreteModel":
        params = normalize_params(params)
        if "family" in params:
            if "type" in params:
                raise ConfigurationError("A model takes either a family or a type, not both.")
            params["type"] = params.pop("family")
        if "type" in params:
            params["type"] = params.pop("type").replace("-", "_")
        grid = params.get("grid", None)
        if isinstance(grid, str):
            params.pop("grid")
            extras["grid"] = ParameterGrid.from_file(params.resolve_path(grid))
        return super().from_params(params, **extras)

    def likelihood(self, observation: str) -> np.ndarray:
        values = np.asarray(self._likelihood(str(observation)), dtype=float)
        if values.shape != (self.grid.size,):
            raise ObservationError(
                f"Expected {self.grid.size} likelihood values for {observation!r}, "
                f"got shape {values.shape}."
            )
        if not np.all(np.isfinite(values)) or np.any(values < 0):
            raise ObservationError(
                f"Likelihood values must be finite and non-negative, got {values.tolist()}."
            )
        return values

    def _likelihood(self, observation: str) -> np.ndarray:
        raise NotImplementedError

    @property
    def observations(self) -> Optional[List[str]]:
        """Known observation keys, None when the observation space is open."""
        return None


@DiscreteModel.register("tabular")
class TabularModel(DiscreteModel):
    def __init__(self, grid: ParameterGrid, likelihood: Dict[str, List[float]]):
        super().__init__(grid)
        if len(likelihood) == 0:
            raise ConfigurationError("A tabular model needs at least one observation.")
        self.table = {}
        for key, values in likelihood.items():
            if len(values) != grid.size:
                raise GridError(
                    f"Observation {key!r} has {len(values)} likelihood values "
                    f"for a grid of {grid.size} points."
                )
            self.table[str(key)] = np.array(values, dtype=float)

    def _likelihood(self, observation: str) -> np.ndarray:
        try:
            return self.table[observation]
        except KeyError:
            raise ObservationError(
                f"Unknown observation {observation!r}, known: {sorted(self.table)}."
            )

    @property
    def observations(self) -> List[str]:
        return list(self.table)


def theta_grid(
    resolution: int = 11,
    thetas: Optional[List[float]] = None,
    prior: Optional[List[float]] = None,
) -> ParameterGrid:
    """Grid over a success probability, equispaced on [0, 1] unless `thetas` is given."""
    if thetas is None:
        if resolution < 2:
            raise GridError(f"A grid over [0, 1] needs a resolution of at least 2, got {resolution}.")
        thetas = np.linspace(0.0, 1.0, resolution).tolist()
    if any(not 0.0 <= theta <= 1.0 for theta in thetas):
        raise GridError(f"Success probabilities must lie in [0, 1], got {thetas}.")
    n = len(thetas)
    prior = prior if prior is not None else [1.0 / n] * n
    if len(prior) != n:
        raise GridError(f"Expected {n} prior masses, got {len(prior)}.")
    points = [
        GridPoint(f"theta={theta:g}", prior[i], [theta]) for i, theta in enumerate(thetas)
    ]
    return ParameterGrid(points)


class ThetaGridModel(DiscreteModel):
    def __init__(
        self,
        resolution: int = 11,
        thetas: Optional[List[float]] = None,
        prior: Optional[List[float]] = None,
        grid: Optional[ParameterGrid] = None,
    ):
        if grid is None:
            grid = theta_grid(resolution, thetas, prior)
        elif any(len(grid.coord(i)) != 1 for i in range(grid.size)):
            raise GridError("A success probability grid needs exactly one coordinate per point.")
        super().__init__(grid)
        self.thetas = np.array([grid.coord(i)[0] for i in range(grid.size)], dtype=float)


@DiscreteModel.register("bernoulli_grid")
class BernoulliGridModel(ThetaGridModel):
    """I.i.d. Bernoulli trials; the observation is a string of 0/1 outcomes, e.g. "1101"."""

    def _likelihood(self, observation: str) -> np.ndarray:
        outcomes = re.sub(r"[\s,]", "", observation)
        if re.fullmatch(r"[01]*", outcomes) is None:
            raise ObservationError(f"Expected a sequence of 0/1 outcomes, got {observation!r}.")
        successes = outcomes.count("1")
        failures = len(outcomes) - successes
        return np.power(self.thetas, successes) * np.power(1.0 - self.thetas, failures)


@DiscreteModel.register("binomial_grid")
class BinomialGridModel(ThetaGridModel):
    """Binomial counts; the observation is "n,k" for k successes out of n trials."""

    def _likelihood(self, observation: str) -> np.ndarray:
        match = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", observation)
        if match is None:
            raise ObservationError(f"Expected an observation of the form 'n,k', got {observation!r}.")
        trials, successes = int(match.group(1)), int(match.group(2))
        if successes > trials:
            raise ObservationError(f"Got {successes} successes out of {trials} trials.")
        return binom.pmf(successes, trials, self.thetas)


def build_grid_model(family: str, **parameters) -> DiscreteModel:
    return DiscreteModel.from_params(Params({"family": family, **parameters}))
