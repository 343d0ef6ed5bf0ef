import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from agnostic_hexagon.bayes.posterior import Posterior, prob
from agnostic_hexagon.errors import EmptyHypothesisError, GridError
from agnostic_hexagon.fbst.surprise import SurpriseProfile, tangent_set
from agnostic_hexagon.lattice.hypothesis import Hypothesis

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EValue:
    value: float
    hypothesis: Hypothesis
    tangent_set: Hypothesis

    def __float__(self):
        return self.value


def _check_inputs(posterior: Posterior, profile: SurpriseProfile, hypothesis: Hypothesis):
    if posterior.grid.size != profile.grid.size:
        raise GridError("The posterior and the surprise profile live on different grids.")
    hypothesis.check_grid(posterior.grid)


def ev(posterior: Posterior, profile: SurpriseProfile, hypothesis: Hypothesis) -> EValue:
    """ev(H|x) = 1 − p(T(H)|x)."""
    _check_inputs(posterior, profile, hypothesis)
    tangent = tangent_set(profile, hypothesis)
    return EValue(1.0 - prob(posterior, tangent), hypothesis, tangent)


def singleton_evalues(
    posterior: Posterior, profile: SurpriseProfile, num_workers: Optional[int] = None
) -> np.ndarray:
    """e-value of every singleton, in grid order whatever the number of workers."""
    size = posterior.grid.size

    def singleton(index: int) -> float:
        return ev(posterior, profile, Hypothesis(1 << index, size)).value

    if num_workers == 0:
        values = [singleton(index) for index in range(size)]
    else:
        with ThreadPoolExecutor(max_workers=num_workers) as executor:
            values = list(executor.map(singleton, range(size)))
    return np.array(values, dtype=float)


def ev_via_sup(
    posterior: Posterior,
    profile: SurpriseProfile,
    hypothesis: Hypothesis,
    singletons: Optional[Sequence[float]] = None,
) -> EValue:
    """Supremum of the singleton e-values over H."""
    _check_inputs(posterior, profile, hypothesis)
    if hypothesis.is_empty:
        raise EmptyHypothesisError("The supremum over an empty hypothesis is undefined.")
    if singletons is None:
        singletons = singleton_evalues(posterior, profile, num_workers=0)
    members = list(hypothesis)
    best = max(members, key=lambda index: singletons[index])
    tangent = tangent_set(profile, Hypothesis(1 << best, hypothesis.size))
    return EValue(float(singletons[best]), hypothesis, tangent)
