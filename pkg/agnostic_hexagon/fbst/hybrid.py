"""Posterior probability verdicts nested inside e-value verdicts.

With c < 0.5 and the posterior cutoffs 1 − c and c, the four predicates

    □H (GFBST accepts)  ⇒  ⊞H (p ≥ 1 − c)  ⇒  ⟡H (p > c)  ⇒  ◇H (GFBST does not reject)

form a chain. The probabilistic predicates are evaluated with closed
boundaries up to BRIDGE_TOLERANCE: on a tie such as p(H) = 1 − c exactly,
the GFBST may accept while the strict posterior cutoff stays agnostic.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence

from agnostic_hexagon.bayes.posterior import Posterior, prior_prob, prob
from agnostic_hexagon.consistency.checks import search
from agnostic_hexagon.consistency.report import CheckResult
from agnostic_hexagon.consistency.sampler import (
    DEFAULT_TRIALS,
    EXHAUSTIVE_SINGLE_LIMIT,
    CheckMode,
    HypothesisSampler,
    choose_mode,
    exhaustive_hypotheses,
)
from agnostic_hexagon.decisions.cutoff_test import cutoff_test
from agnostic_hexagon.decisions.loss import CutoffPair
from agnostic_hexagon.errors import ChainViolationError, PreconditionError
from agnostic_hexagon.fbst.evalue import ev
from agnostic_hexagon.fbst.gfbst import GfbstConfig, GfbstTest, gfbst
from agnostic_hexagon.fbst.surprise import SurpriseProfile
from agnostic_hexagon.lattice.hypothesis import Hypothesis
from agnostic_hexagon.modality.hexagon import check_hexagon
from agnostic_hexagon.modality.verdict import Modality, ModalVerdict

logger = logging.getLogger(__name__)

BRIDGE_TOLERANCE = 1e-12


def _require_bridge(config: GfbstConfig) -> None:
    if not config.bridges_probability:
        raise PreconditionError(
            f"Nesting posterior cutoffs inside e-value verdicts needs c < 0.5, got c={config.c}."
        )


def probabilistic_cutoffs(config: GfbstConfig) -> CutoffPair:
    return CutoffPair(1.0 - config.c, config.c)


def check_ev_prob_bridge(
    posterior: Posterior,
    profile: SurpriseProfile,
    config: GfbstConfig,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
) -> CheckResult:
    """Checks □H ⇒ p(H|x) ≥ 1 − c and p(H|x) > c ⇒ ◇H on every hypothesis."""
    _require_bridge(config)
    c = config.c

    def violation(verdict, hypothesis: Hypothesis):
        result = verdict(hypothesis)
        p = prob(posterior, hypothesis)
        if result is ModalVerdict.ACCEPT and p < 1.0 - c - BRIDGE_TOLERANCE:
            return (result,)
        if p > c + BRIDGE_TOLERANCE and result is ModalVerdict.REJECT:
            return (result,)
        return None

    test = GfbstTest(posterior, profile, config)
    size = posterior.grid.size
    mode = choose_mode(size, EXHAUSTIVE_SINGLE_LIMIT)
    if mode is CheckMode.EXHAUSTIVE:
        hypotheses = exhaustive_hypotheses(size)
    else:
        logger.warning(f"Checking the e-value to probability bridge on {trials} sampled hypotheses.")
        hypotheses = HypothesisSampler(size, seed, trials).hypotheses()
    return search(
        "ev_prob_bridge",
        test.evaluate,
        ((hypothesis,) for hypothesis in hypotheses),
        mode,
        note=f"c={c:g}",
        violation=violation,
    )


@dataclass(frozen=True)
class HybridRecord:
    hypothesis: Hypothesis
    probability: float
    necessity: bool
    probabilistic_necessity: bool
    probabilistic_possibility: bool
    possibility: bool
    cutoff_verdict: ModalVerdict
    gfbst_verdict: ModalVerdict
    prior_zero: bool

    @property
    def chain(self):
        return (
            self.necessity,
            self.probabilistic_necessity,
            self.probabilistic_possibility,
            self.possibility,
        )

    def alethic_assignment(self) -> Dict[Modality, bool]:
        return _assignment(self.necessity, self.possibility)

    def probabilistic_assignment(self) -> Dict[Modality, bool]:
        return _assignment(self.probabilistic_necessity, self.probabilistic_possibility)

    def to_dict(self, grid) -> Dict[str, Any]:
        return {
            "hypothesis": self.hypothesis.ids(grid),
            "probability": self.probability,
            "necessity": self.necessity,
            "probabilistic_necessity": self.probabilistic_necessity,
            "probabilistic_possibility": self.probabilistic_possibility,
            "possibility": self.possibility,
            "cutoff_verdict": str(self.cutoff_verdict),
            "gfbst_verdict": str(self.gfbst_verdict),
        }


def _assignment(necessity: bool, possibility: bool) -> Dict[Modality, bool]:
    """The six modalities spanned by a necessity and a possibility predicate."""
    return {
        Modality.A: necessity,
        Modality.E: not possibility,
        Modality.Y: possibility and not necessity,
        Modality.I: possibility,
        Modality.O: not necessity,
        Modality.U: necessity or not possibility,
    }


CHAIN_LINKS = ("□H ⇒ ⊞H", "⊞H ⇒ ⟡H", "⟡H ⇒ ◇H")


def hybrid_relations(
    posterior: Posterior,
    profile: SurpriseProfile,
    config: GfbstConfig,
    hypothesis: Hypothesis,
) -> HybridRecord:
    _require_bridge(config)
    c = config.c
    p = prob(posterior, hypothesis)
    verdict = gfbst(posterior, profile, hypothesis, config)
    record = HybridRecord(
        hypothesis=hypothesis,
        probability=p,
        necessity=verdict is ModalVerdict.ACCEPT,
        probabilistic_necessity=p >= 1.0 - c - BRIDGE_TOLERANCE,
        probabilistic_possibility=p > c + BRIDGE_TOLERANCE,
        possibility=verdict is not ModalVerdict.REJECT,
        cutoff_verdict=cutoff_test(posterior, hypothesis, probabilistic_cutoffs(config)),
        gfbst_verdict=verdict,
        prior_zero=prior_prob(posterior.grid, hypothesis) == 0.0,
    )
    for link, (before, after) in zip(CHAIN_LINKS, zip(record.chain, record.chain[1:])):
        if before and not after:
            raise ChainViolationError(link)
    if record.prior_zero:
        if record.cutoff_verdict is not ModalVerdict.REJECT:
            raise ChainViolationError(
                "p(H) = 0 ⇒ ¬⟡H", "A hypothesis without prior mass escaped rejection."
            )
        if record.necessity:
            raise ChainViolationError(
                "p(H) = 0 ⇒ ¬□H", "A hypothesis without prior mass was accepted."
            )
    return record


def check_hybrid_hexagon(
    posterior: Posterior,
    profile: SurpriseProfile,
    config: GfbstConfig,
    hypothesis: Hypothesis,
) -> Dict[str, List]:
    """Violated relations of the two mixed hexagons (□H, ⟡H) and (⊞H, ◇H)."""
    record = hybrid_relations(posterior, profile, config, hypothesis)
    return {
        "alethic_necessity": check_hexagon(
            _assignment(record.necessity, record.probabilistic_possibility)
        ),
        "probabilistic_necessity": check_hexagon(
            _assignment(record.probabilistic_necessity, record.possibility)
        ),
    }


@dataclass(frozen=True)
class SweepRow:
    c: float
    ev: float
    ev_complement: float
    verdict: ModalVerdict
    complement_verdict: ModalVerdict

    def to_dict(self) -> Dict[str, Any]:
        return {
            "c": self.c,
            "ev": self.ev,
            "ev_complement": self.ev_complement,
            "verdict": str(self.verdict),
            "complement_verdict": str(self.complement_verdict),
        }


def cutoff_sweep(
    posterior: Posterior,
    profile: SurpriseProfile,
    hypothesis: Hypothesis,
    cutoffs: Sequence[float],
) -> List[SweepRow]:
    """GFBST verdicts of H and of its complement for each cutoff, in the given order."""
    own = ev(posterior, profile, hypothesis).value
    other = ev(posterior, profile, ~hypothesis).value
    rows = []
    for c in cutoffs:
        config = GfbstConfig(c)
        rows.append(
            SweepRow(
                config.c,
                own,
                other,
                gfbst(posterior, profile, hypothesis, config),
                gfbst(posterior, profile, ~hypothesis, config),
            )
        )
    return rows
