import numpy as np
import pytest

from agnostic_hexagon.bayes.posterior import Posterior
from agnostic_hexagon.config import Params
from agnostic_hexagon.consistency.checks import check_invertibility, classify
from agnostic_hexagon.consistency.region import extract_region
from agnostic_hexagon.errors import CutoffError
from agnostic_hexagon.fbst.evalue import ev
from agnostic_hexagon.fbst.gfbst import (
    FbstTest,
    GfbstConfig,
    GfbstTest,
    fbst,
    gfbst,
    gfbst_region,
)
from agnostic_hexagon.fbst.surprise import surprise
from agnostic_hexagon.lattice.agnostic_test import AgnosticTest, region_test_evaluate
from agnostic_hexagon.lattice.grid import ParameterGrid
from agnostic_hexagon.lattice.hypothesis import Hypothesis, enumerate_hypotheses
from agnostic_hexagon.modality.verdict import ModalVerdict
from agnostic_hexagon.tests.agnostic_test_case import AgnosticTestCase

ACCEPT, AGNOSTIC, REJECT = ModalVerdict.ACCEPT, ModalVerdict.AGNOSTIC, ModalVerdict.REJECT


class GfbstTestCase(AgnosticTestCase):
    def setUp(self):
        super().setUp()
        self.grid = ParameterGrid.from_file(self.FIXTURES_ROOT / "g3_grid.json")
        self.posterior = Posterior.from_masses([0.5, 0.3, 0.2], grid=self.grid)
        self.profile = surprise(self.posterior)
        self.config = GfbstConfig(0.25)

    def h(self, *ids):
        return Hypothesis.from_ids(self.grid, ids)

    def test_three_points(self):
        assert gfbst(self.posterior, self.profile, self.h("t3"), self.config) is REJECT
        assert gfbst(self.posterior, self.profile, self.h("t1", "t2"), self.config) is ACCEPT
        assert gfbst(self.posterior, self.profile, self.h("t2"), self.config) is AGNOSTIC
        assert gfbst_region(self.posterior, self.profile, self.config) == self.h("t1", "t2")

    def test_config(self):
        with pytest.raises(CutoffError):
            GfbstConfig(0.0)
        with pytest.raises(CutoffError):
            GfbstConfig(1.0)
        assert GfbstConfig(0.4).bridges_probability
        assert not GfbstConfig(0.5).bridges_probability

    def test_from_params(self):
        test = AgnosticTest.from_params(
            Params({"type": "gfbst", "c": 0.25, "reference": "uniform"}),
            posterior=self.posterior,
            grid=self.grid,
        )
        assert isinstance(test, GfbstTest)
        assert test.description == "GFBST c=0.25"
        assert test.region == self.h("t1", "t2")
        assert test(self.h("t2")) is AGNOSTIC

    def test_fbst_is_two_valued(self):
        assert fbst(self.posterior, self.profile, self.h("t3"), 0.25) is REJECT
        assert fbst(self.posterior, self.profile, self.h("t2"), 0.25) is ACCEPT
        test = FbstTest(self.posterior, self.profile, 0.25)
        assert {test(h) for h in enumerate_hypotheses(self.grid)} == {ACCEPT, REJECT}
        assert not check_invertibility(test).passed
        with pytest.raises(CutoffError):
            fbst(self.posterior, self.profile, self.h("t3"), 1.5)

    def test_gfbst_is_a_region_test(self):
        rng = np.random.default_rng(17)
        for c in (0.1, 0.25, 0.5, 0.75):
            config = GfbstConfig(c)
            for n in range(1, 9):
                posterior = Posterior.from_masses(rng.dirichlet(np.ones(n)).tolist())
                profile = surprise(posterior)
                region = gfbst_region(posterior, profile, config)
                test = GfbstTest(posterior, profile, config)
                for hypothesis in enumerate_hypotheses(posterior.grid):
                    assert test(hypothesis) is region_test_evaluate(region, hypothesis)
                    low = ev(posterior, profile, hypothesis).value <= c
                    assert low == hypothesis.is_disjoint(region)
                assert classify(test).overall
                assert extract_region(test) == region

    def test_cutoff_tie(self):
        posterior = Posterior.from_masses([0.8, 0.2])
        profile = surprise(posterior)
        config = GfbstConfig(0.2)
        first = Hypothesis.from_indices([0], 2)
        assert gfbst(posterior, profile, first, config) is ACCEPT
        assert gfbst(posterior, profile, ~first, config) is REJECT
