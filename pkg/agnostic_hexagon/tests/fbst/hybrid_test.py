import numpy as np
import pytest

from agnostic_hexagon.bayes.model import TabularModel
from agnostic_hexagon.bayes.posterior import Posterior, posterior as condition
from agnostic_hexagon.decisions.loss import CutoffPair
from agnostic_hexagon.errors import PreconditionError
from agnostic_hexagon.fbst.gfbst import GfbstConfig
from agnostic_hexagon.fbst.hybrid import (
    check_ev_prob_bridge,
    check_hybrid_hexagon,
    cutoff_sweep,
    hybrid_relations,
    probabilistic_cutoffs,
)
from agnostic_hexagon.fbst.surprise import surprise
from agnostic_hexagon.lattice.grid import GridPoint, ParameterGrid
from agnostic_hexagon.lattice.hypothesis import Hypothesis, enumerate_hypotheses
from agnostic_hexagon.modality.verdict import Modality, ModalVerdict
from agnostic_hexagon.tests.agnostic_test_case import AgnosticTestCase

ACCEPT, AGNOSTIC, REJECT = ModalVerdict.ACCEPT, ModalVerdict.AGNOSTIC, ModalVerdict.REJECT


class HybridTest(AgnosticTestCase):
    def setUp(self):
        super().setUp()
        self.grid = ParameterGrid.from_file(self.FIXTURES_ROOT / "g3_grid.json")
        self.posterior = Posterior.from_masses([0.5, 0.3, 0.2], grid=self.grid)
        self.profile = surprise(self.posterior)
        self.config = GfbstConfig(0.25)

    def h(self, *ids):
        return Hypothesis.from_ids(self.grid, ids)

    def test_records(self):
        rejected = hybrid_relations(self.posterior, self.profile, self.config, self.h("t3"))
        assert rejected.chain == (False, False, False, False)
        assert rejected.cutoff_verdict is REJECT

        accepted = hybrid_relations(self.posterior, self.profile, self.config, self.h("t1", "t2"))
        assert accepted.chain == (True, True, True, True)
        assert accepted.gfbst_verdict is ACCEPT

        undecided = hybrid_relations(self.posterior, self.profile, self.config, self.h("t2"))
        assert undecided.chain == (False, False, True, True)
        assert undecided.cutoff_verdict is AGNOSTIC
        assert undecided.alethic_assignment()[Modality.Y]
        assert undecided.probabilistic_assignment()[Modality.Y]
        assert undecided.to_dict(self.grid)["hypothesis"] == ["t2"]

        assert probabilistic_cutoffs(self.config) == CutoffPair(0.75, 0.25)

    def test_needs_small_cutoff(self):
        with pytest.raises(PreconditionError):
            hybrid_relations(self.posterior, self.profile, GfbstConfig(0.5), self.h("t2"))
        with pytest.raises(PreconditionError):
            check_ev_prob_bridge(self.posterior, self.profile, GfbstConfig(0.6))

    def test_chain_on_random_posteriors(self):
        rng = np.random.default_rng(23)
        for c in (0.1, 0.25, 0.4):
            config = GfbstConfig(c)
            for n in range(1, 11):
                posterior = Posterior.from_masses(rng.dirichlet(np.ones(n)).tolist())
                profile = surprise(posterior)
                result = check_ev_prob_bridge(posterior, profile, config)
                assert result.passed, (c, n, result)
                for hypothesis in enumerate_hypotheses(posterior.grid):
                    record = hybrid_relations(posterior, profile, config, hypothesis)
                    assert record.chain == tuple(sorted(record.chain))

    def test_boundary_tie(self):
        posterior = Posterior.from_masses([0.8, 0.2])
        record = hybrid_relations(
            posterior, surprise(posterior), GfbstConfig(0.2), Hypothesis.from_indices([0], 2)
        )
        assert record.necessity
        assert record.probabilistic_necessity
        assert record.cutoff_verdict is AGNOSTIC

    def test_zero_prior(self):
        grid = ParameterGrid(
            [
                GridPoint("a", 0.0, [0.0]),
                GridPoint("b", 0.6, [0.5]),
                GridPoint("c", 0.4, [1.0]),
            ]
        )
        posterior = condition(TabularModel(grid, {"x": [1.0, 1.0, 1.0]}), "x")
        record = hybrid_relations(
            posterior, surprise(posterior), GfbstConfig(0.25), Hypothesis.from_ids(grid, ["a"])
        )
        assert record.prior_zero
        assert record.cutoff_verdict is REJECT
        assert not record.necessity

    def test_mixed_hexagons(self):
        for hypothesis in enumerate_hypotheses(self.grid):
            violations = check_hybrid_hexagon(self.posterior, self.profile, self.config, hypothesis)
            assert violations == {"alethic_necessity": [], "probabilistic_necessity": []}

    def test_sweep(self):
        rows = cutoff_sweep(self.posterior, self.profile, self.h("t2"), [0.125, 0.25, 0.5, 0.6])
        assert [row.c for row in rows] == [0.125, 0.25, 0.5, 0.6]
        assert [row.verdict for row in rows] == [AGNOSTIC, AGNOSTIC, REJECT, REJECT]
        assert [row.complement_verdict for row in rows] == [AGNOSTIC, AGNOSTIC, ACCEPT, ACCEPT]
        assert rows[0].to_dict() == {
            "c": 0.125,
            "ev": 0.5,
            "ev_complement": 1.0,
            "verdict": "agnostic",
            "complement_verdict": "agnostic",
        }
