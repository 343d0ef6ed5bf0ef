import pytest

from agnostic_hexagon.config import Params
from agnostic_hexagon.errors import EmptyRegionError, GridError
from agnostic_hexagon.lattice.agnostic_test import (
    AgnosticTest,
    ExplicitTableTest,
    RegionTest,
    RuleTest,
    region_test_evaluate,
)
from agnostic_hexagon.lattice.grid import ParameterGrid
from agnostic_hexagon.lattice.hypothesis import Hypothesis, enumerate_hypotheses
from agnostic_hexagon.modality.verdict import ModalVerdict
from agnostic_hexagon.tests.agnostic_test_case import AgnosticTestCase

ACCEPT, AGNOSTIC, REJECT = ModalVerdict.ACCEPT, ModalVerdict.AGNOSTIC, ModalVerdict.REJECT


class AgnosticTestTest(AgnosticTestCase):
    def setUp(self):
        super().setUp()
        self.grid = ParameterGrid.uniform(4)

    def h(self, *ids):
        return Hypothesis.from_ids(self.grid, ids)

    def test_region_cases(self):
        region = self.h("t1", "t2")
        assert region_test_evaluate(region, self.h("t1", "t2", "t3")) is ACCEPT
        assert region_test_evaluate(region, self.h("t3")) is REJECT
        assert region_test_evaluate(region, self.h("t2", "t3")) is AGNOSTIC

    def test_empty_region(self):
        with pytest.raises(EmptyRegionError):
            region_test_evaluate(Hypothesis.empty(4), self.h("t1"))
        with pytest.raises(EmptyRegionError):
            RegionTest(self.grid, Hypothesis.empty(4))

    def test_region_invertibility(self):
        region = self.h("t2", "t4")
        for hypothesis in enumerate_hypotheses(self.grid):
            accepted = region_test_evaluate(region, hypothesis) is ACCEPT
            assert accepted == (region_test_evaluate(region, ~hypothesis) is REJECT)

    def test_region_from_params(self):
        test = AgnosticTest.from_params(
            Params({"type": "region", "region": ["t3"]}), grid=self.grid
        )
        assert test(self.h("t3", "t4")) is ACCEPT
        assert test.description == "region ['t3']"
        with pytest.raises(GridError):
            test(Hypothesis.full(3))

    def test_explicit_table(self):
        constant = ExplicitTableTest.constant(self.grid, ACCEPT)
        assert all(constant(h) is ACCEPT for h in enumerate_hypotheses(self.grid))
        changed = constant.with_verdict(self.h("t1"), REJECT)
        assert changed(self.h("t1")) is REJECT
        assert constant(self.h("t1")) is ACCEPT

    def test_explicit_table_totality(self):
        grid = ParameterGrid.uniform(1)
        full = ExplicitTableTest(grid, {Hypothesis.empty(1): REJECT, Hypothesis.full(1): ACCEPT})
        assert full(Hypothesis.full(1)) is ACCEPT
        with pytest.raises(GridError):
            ExplicitTableTest(grid, {Hypothesis.full(1): ACCEPT})

    def test_table_from_rows(self):
        test = AgnosticTest.from_params(
            Params(
                {
                    "type": "table",
                    "rows": {"t1": "accept", "t1, t2": "reject", "": "reject"},
                    "default": "agnostic",
                }
            ),
            grid=self.grid,
        )
        assert test(self.h("t1")) is ACCEPT
        assert test(self.h("t1", "t2")) is REJECT
        assert test(Hypothesis.empty(4)) is REJECT
        assert test(self.h("t3")) is AGNOSTIC

    def test_rule(self):
        test = RuleTest(self.grid, lambda h: len(h) / self.grid.size if len(h) != 1 else 0.5)
        assert test(Hypothesis.full(4)) is REJECT
        assert test(Hypothesis.empty(4)) is ACCEPT
        assert test(self.h("t2")) is AGNOSTIC
        with pytest.raises(ValueError):
            test(self.h("t2", "t3", "t4"))
        assert test.description == "rule"
