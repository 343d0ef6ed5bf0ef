import numpy as np
import pytest

from agnostic_hexagon.bayes.posterior import Posterior
from agnostic_hexagon.decisions.cutoff_test import cutoff_test
from agnostic_hexagon.decisions.loss import (
    CutoffPair,
    LossSpec,
    bayes_optimal_decision,
    cutoffs_from_loss,
    expected_losses,
    two_action_decision,
)
from agnostic_hexagon.errors import CutoffError, LossSpecError, ProbabilityError
from agnostic_hexagon.lattice.hypothesis import Hypothesis
from agnostic_hexagon.modality.verdict import ModalVerdict
from agnostic_hexagon.tests.agnostic_test_case import AgnosticTestCase

ACCEPT, AGNOSTIC, REJECT = ModalVerdict.ACCEPT, ModalVerdict.AGNOSTIC, ModalVerdict.REJECT

TIE = 1e-9


class LossTest(AgnosticTestCase):
    def test_validation(self):
        with pytest.raises(LossSpecError):
            LossSpec(0.0, 0.1)
        with pytest.raises(LossSpecError):
            LossSpec(0.5, 0.5)
        with pytest.raises(LossSpecError):
            LossSpec(2.0, 1.0)
        with pytest.raises(LossSpecError):
            LossSpec(1.0, 0.0)
        with pytest.raises(CutoffError):
            CutoffPair(0.3, 0.4)
        with pytest.raises(CutoffError):
            CutoffPair(0.0, 0.0)
        with pytest.raises(CutoffError):
            CutoffPair(1.0, 1.0)
        assert CutoffPair(0.5, 0.5).two_valued

    def test_losses(self):
        loss = LossSpec(1.0, 0.25)
        assert cutoffs_from_loss(loss) == CutoffPair(0.75, 0.25)
        assert CutoffPair.from_loss(loss) == CutoffPair(0.75, 0.25)
        assert expected_losses(0.2, loss) == {ACCEPT: 0.8, AGNOSTIC: 0.25, REJECT: 0.2}
        assert loss.loss(ACCEPT, False) == 1.0
        assert loss.loss(REJECT, True) == 1.0
        assert loss.loss(AGNOSTIC, False) == 0.25
        with pytest.raises(ProbabilityError):
            expected_losses(1.5, loss)
        assert expected_losses(1.0, loss) == {ACCEPT: 0.0, AGNOSTIC: 0.25, REJECT: 1.0}

    def test_two_action_regime(self):
        # a costly agnostic action is never the cheapest one
        loss = LossSpec(3.0, 0.9)
        cuts = cutoffs_from_loss(loss)
        assert cuts.two_valued
        assert cuts.c1 == pytest.approx(0.25)

    def test_tie_preference(self):
        decision, losses = bayes_optimal_decision(0.75, LossSpec(1.0, 0.25))
        assert losses[ACCEPT] == losses[AGNOSTIC]
        assert decision is AGNOSTIC
        decision, _ = bayes_optimal_decision(0.5, LossSpec(1.0, 0.9))
        assert decision is ACCEPT

    def test_two_action_decision(self):
        assert two_action_decision(0.5, 1.0) is REJECT
        assert two_action_decision(0.51, 1.0) is ACCEPT
        assert two_action_decision(0.3, 3.0) is ACCEPT
        assert two_action_decision(0.2, 3.0) is REJECT
        with pytest.raises(ProbabilityError):
            two_action_decision(-0.1, 1.0)
        with pytest.raises(ProbabilityError):
            two_action_decision(1.0000000000000002, 1.0)

    def test_cutoffs_match_bayes_decisions(self):
        rng = np.random.default_rng(2024)
        losses = []
        for _ in range(50):
            a = float(rng.uniform(0.1, 5.0))
            b = float(rng.uniform(0.01, 0.99) * min(a, 1.0))
            losses.append(LossSpec(a, b))
        cuts = [cutoffs_from_loss(loss) for loss in losses]
        event = Hypothesis.from_indices([0], 2)
        compared = 0
        for p in np.linspace(0.0, 1.0, 10001):
            p = float(p)
            posterior = Posterior.from_masses([p, 1.0 - p])
            for loss, pair in zip(losses, cuts):
                decision, expected = bayes_optimal_decision(p, loss)
                values = sorted(expected.values())
                if values[1] - values[0] < TIE:
                    continue
                assert cutoff_test(posterior, event, pair) is decision, (p, loss)
                compared += 1
        assert compared > 490000
