import logging
from typing import Dict, Tuple

from agnostic_hexagon.config import FromParams
from agnostic_hexagon.errors import CutoffError, LossSpecError, ProbabilityError
from agnostic_hexagon.modality.verdict import ModalVerdict

logger = logging.getLogger(__name__)

ACCEPT, AGNOSTIC, REJECT = ModalVerdict.ACCEPT, ModalVerdict.AGNOSTIC, ModalVerdict.REJECT

# order in which ties between expected losses are resolved, most cautious first
TIE_PREFERENCE = (AGNOSTIC, ACCEPT, REJECT)


class LossSpec(FromParams):
    """Three-action loss: accepting a false H costs 1, rejecting a true H costs `a`,
    remaining agnostic costs `b` either way."""

    def __init__(self, a: float, b: float):
        if not a > 0:
            raise LossSpecError(f"The type 1 error loss must be positive, got a={a}.")
        if not 0 < b < min(a, 1.0):
            raise LossSpecError(
                f"The agnosticity loss must satisfy 0 < b < min(a, 1) = {min(a, 1.0)}, got b={b}."
            )
        self.a = float(a)
        self.b = float(b)

    def loss(self, action: ModalVerdict, hypothesis_true: bool) -> float:
        if action is ACCEPT:
            return 0.0 if hypothesis_true else 1.0
        if action is REJECT:
            return self.a if hypothesis_true else 0.0
        return self.b

    def __eq__(self, other):
        if not isinstance(other, LossSpec):
            return NotImplemented
        return (self.a, self.b) == (other.a, other.b)

    def __repr__(self):
        return f"LossSpec(a={self.a}, b={self.b})"


class CutoffPair(FromParams):
    def __init__(self, c1: float, c2: float):
        if not 0 < c1 <= 1:
            raise CutoffError(f"The acceptance cutoff must lie in (0, 1], got c1={c1}.")
        if not 0 <= c2 < 1:
            raise CutoffError(f"The rejection cutoff must lie in [0, 1), got c2={c2}.")
        if c2 > c1:
            raise CutoffError(f"Cutoffs must satisfy c2 <= c1, got c1={c1}, c2={c2}.")
        self.c1 = float(c1)
        self.c2 = float(c2)

    @classmethod
    def from_loss(cls, loss: LossSpec) -> "CutoffPair":
        return cutoffs_from_loss(loss)

    @property
    def two_valued(self) -> bool:
        return self.c1 == self.c2

    def __eq__(self, other):
        if not isinstance(other, CutoffPair):
            return NotImplemented
        return (self.c1, self.c2) == (other.c1, other.c2)

    def __repr__(self):
        return f"CutoffPair(c1={self.c1}, c2={self.c2})"


def cutoffs_from_loss(loss: LossSpec) -> CutoffPair:
    two_action = 1.0 / (1.0 + loss.a)
    return CutoffPair(max(two_action, 1.0 - loss.b), min(two_action, loss.b / loss.a))


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ProbabilityError(f"Probabilities lie in [0, 1], got {p}.")


def expected_losses(p: float, loss: LossSpec) -> Dict[ModalVerdict, float]:
    """Posterior expected loss of each action when p(H|x) = p."""
    _check_probability(p)
    return {
        ACCEPT: 1.0 - p,
        AGNOSTIC: loss.b,
        REJECT: loss.a * p,
    }


def bayes_optimal_decision(
    p: float, loss: LossSpec
) -> Tuple[ModalVerdict, Dict[ModalVerdict, float]]:
    losses = expected_losses(p, loss)
    best = min(losses.values())
    decision = next(action for action in TIE_PREFERENCE if losses[action] == best)
    return decision, losses


def two_action_decision(p: float, a: float) -> ModalVerdict:
    """Accept or reject only; a tie goes to rejection."""
    _check_probability(p)
    return ACCEPT if 1.0 - p < a * p else REJECT
