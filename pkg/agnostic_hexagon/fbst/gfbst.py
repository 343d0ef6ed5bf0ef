import logging

from agnostic_hexagon.bayes.posterior import Posterior
from agnostic_hexagon.config import FromParams
from agnostic_hexagon.errors import CutoffError, EmptyRegionError
from agnostic_hexagon.fbst.evalue import ev, singleton_evalues
from agnostic_hexagon.fbst.surprise import SurpriseProfile, surprise
from agnostic_hexagon.lattice.agnostic_test import AgnosticTest, RuleTest
from agnostic_hexagon.lattice.hypothesis import Hypothesis
from agnostic_hexagon.modality.verdict import ModalVerdict

logger = logging.getLogger(__name__)


def _check_cutoff(c: float) -> None:
    if not 0.0 < c < 1.0:
        raise CutoffError(f"The e-value cutoff must lie in (0, 1), got c={c}.")


class GfbstConfig(FromParams):
    def __init__(self, c: float):
        _check_cutoff(c)
        self.c = float(c)

    @property
    def bridges_probability(self) -> bool:
        """Whether e-value verdicts can be nested inside posterior cutoffs 1 − c and c."""
        return self.c < 0.5

    def __repr__(self):
        return f"GfbstConfig(c={self.c})"


def fbst(
    posterior: Posterior, profile: SurpriseProfile, hypothesis: Hypothesis, c: float
) -> ModalVerdict:
    _check_cutoff(c)
    if ev(posterior, profile, hypothesis).value > c:
        return ModalVerdict.ACCEPT
    return ModalVerdict.REJECT


def gfbst(
    posterior: Posterior,
    profile: SurpriseProfile,
    hypothesis: Hypothesis,
    config: GfbstConfig,
) -> ModalVerdict:
    if ev(posterior, profile, hypothesis).value <= config.c:
        return ModalVerdict.REJECT
    if ev(posterior, profile, ~hypothesis).value <= config.c:
        return ModalVerdict.ACCEPT
    return ModalVerdict.AGNOSTIC


def gfbst_region(
    posterior: Posterior, profile: SurpriseProfile, config: GfbstConfig
) -> Hypothesis:
    """Points whose singleton e-value exceeds c; H is rejected iff it misses them."""
    values = singleton_evalues(posterior, profile)
    region = Hypothesis.from_bools(values > config.c)
    if region.is_empty:
        raise EmptyRegionError(
            f"No singleton e-value exceeds c={config.c}, the surprise mode should have e-value 1."
        )
    return region


@AgnosticTest.register("fbst", "from_config")
class FbstTest(RuleTest):
    """Two-valued test: accept when ev(H) > c, reject otherwise."""

    def __init__(self, posterior: Posterior, profile: SurpriseProfile, c: float):
        _check_cutoff(c)
        super().__init__(
            posterior.grid,
            lambda hypothesis: fbst(posterior, profile, hypothesis, c),
            description=f"FBST c={c:g}",
        )
        self.posterior = posterior
        self.profile = profile
        self.c = c

    @classmethod
    def from_config(
        cls,
        posterior: Posterior,
        c: float,
        tie_tolerance: float = 0.0,
        reference: str = "from-grid",
    ) -> "FbstTest":
        profile = surprise(posterior, tie_tolerance=tie_tolerance, reference=reference)
        return cls(posterior, profile, c)


@AgnosticTest.register("gfbst", "from_config")
class GfbstTest(RuleTest):
    def __init__(self, posterior: Posterior, profile: SurpriseProfile, config: GfbstConfig):
        super().__init__(
            posterior.grid,
            lambda hypothesis: gfbst(posterior, profile, hypothesis, config),
            description=f"GFBST c={config.c:g}",
        )
        self.posterior = posterior
        self.profile = profile
        self.config = config

    @classmethod
    def from_config(
        cls,
        posterior: Posterior,
        c: float,
        tie_tolerance: float = 0.0,
        reference: str = "from-grid",
    ) -> "GfbstTest":
        profile = surprise(posterior, tie_tolerance=tie_tolerance, reference=reference)
        return cls(posterior, profile, GfbstConfig(c))

    @property
    def region(self) -> Hypothesis:
        return gfbst_region(self.posterior, self.profile, self.config)
