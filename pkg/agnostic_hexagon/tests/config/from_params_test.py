from copy import deepcopy
from typing import Dict, List, Optional, Union

import pytest

from agnostic_hexagon.bayes.model import BinomialGridModel, DiscreteModel, TabularModel
from agnostic_hexagon.bayes.posterior import Posterior
from agnostic_hexagon.config import ConfigurationError, FromParams, Lazy, Params
from agnostic_hexagon.decisions.cutoff_test import CutoffTest
from agnostic_hexagon.decisions.loss import CutoffPair, LossSpec
from agnostic_hexagon.lattice.agnostic_test import AgnosticTest, RegionTest
from agnostic_hexagon.lattice.grid import ParameterGrid
from agnostic_hexagon.tests.agnostic_test_case import AgnosticTestCase

G3_GRID = {
    "points": [
        {"id": "t1", "coord": [0.0], "prior": 0.5},
        {"id": "t2", "coord": [0.5], "prior": 0.3},
        {"id": "t3", "coord": [1.0], "prior": 0.2},
    ]
}


class FromParamsTest(AgnosticTestCase):
    def test_basic_from_params(self):
        loss = LossSpec.from_params(Params({"a": 1, "b": 0.25}))
        assert loss == LossSpec(1.0, 0.25)
        assert isinstance(loss.a, float)

        with pytest.raises(ConfigurationError):
            LossSpec.from_params(Params({"a": 1}))

        with pytest.raises(ConfigurationError):
            LossSpec.from_params(Params({"a": 1, "b": 0.25, "c": 0.5}))

        with pytest.raises(TypeError):
            LossSpec.from_params(Params({"a": "one", "b": 0.25}))

    def test_simple_nesting(self):
        grid = ParameterGrid.from_params(Params(deepcopy(G3_GRID)))
        assert grid.ids == ["t1", "t2", "t3"]
        assert grid.priors.tolist() == [0.5, 0.3, 0.2]
        assert grid.references.tolist() == [1.0 / 3] * 3

    def test_registrable_nesting(self):
        model = DiscreteModel.from_params(
            Params({"grid": deepcopy(G3_GRID), "likelihood": {"x": [1, 1, 1]}})
        )
        assert isinstance(model, TabularModel)
        assert model.observations == ["x"]

        model = DiscreteModel.from_params(Params({"family": "binomial-grid", "resolution": 5}))
        assert isinstance(model, BinomialGridModel)
        assert model.grid.size == 5

        with pytest.raises(ConfigurationError):
            DiscreteModel.from_params(Params({"family": "tabular", "type": "tabular"}))
        with pytest.raises(ConfigurationError):
            DiscreteModel.from_params(Params({"family": "poisson-grid"}))

    def test_grid_path_is_resolved(self):
        model = DiscreteModel.from_params(Params.from_file(self.FIXTURES_ROOT / "g3_model.json"))
        assert model.grid == ParameterGrid.from_dict(G3_GRID)

    def test_alternative_constructor(self):
        grid = ParameterGrid.from_dict(G3_GRID)
        test = AgnosticTest.from_params(Params({"region": ["t1", "t2"]}), grid=grid)
        assert isinstance(test, RegionTest)
        assert test.region.ids(grid) == ["t1", "t2"]

        posterior = Posterior(grid, grid.priors)
        test = AgnosticTest.from_params(
            Params({"type": "cutoff", "c1": 0.75, "c2": 0.25}), posterior=posterior, grid=grid
        )
        assert isinstance(test, CutoffTest)
        assert test.cuts == CutoffPair(0.75, 0.25)
        assert test.loss is None

        with pytest.raises(ConfigurationError):
            AgnosticTest.from_params(
                Params({"type": "cutoff", "a": 1, "b": 0.25, "c1": 0.75, "c2": 0.25}),
                posterior=posterior,
            )

    def test_lazy(self):
        grid = ParameterGrid.from_dict(G3_GRID)

        class Holder(FromParams):
            def __init__(self, test: Lazy[AgnosticTest]):
                self.test = test

        holder = Holder.from_params(Params({"test": {"type": "gfbst", "c": 0.25}}))
        posterior = Posterior(grid, grid.priors)
        first = holder.test.construct(posterior=posterior, grid=grid)
        second = holder.test.construct(posterior=posterior, grid=grid)
        assert first is not second
        assert first.config.c == second.config.c == 0.25
        assert repr(holder.test) == "Lazy(test)"

        broken = Holder.from_params(Params({"test": {"type": "gfbst", "c": 1.5}}))
        with pytest.raises(ConfigurationError) as error:
            broken.test.construct(posterior=posterior, grid=grid)
        assert str(error.value).startswith("Could not build the test: ")
        with pytest.raises(ConfigurationError):
            Holder.from_params(Params({"test": {"type": "bayes"}})).test.construct(
                posterior=posterior, grid=grid
            )

    def test_union_of_id_lists_and_predicates(self):
        class Hypotheses(FromParams):
            def __init__(self, hypotheses: List[Union[List[str], str]]):
                self.hypotheses = hypotheses

        parsed = Hypotheses.from_params(Params({"hypotheses": [["t1", "t2"], "x0 <= 0.5"]}))
        assert parsed.hypotheses == [["t1", "t2"], "x0 <= 0.5"]

    def test_optional_and_mapping(self):
        class Table(FromParams):
            def __init__(self, rows: Dict[str, str], default: Optional[str] = None):
                self.rows = rows
                self.default = default

        table = Table.from_params(Params({"rows": {"t1": "accept"}}))
        assert table.rows == {"t1": "accept"}
        assert table.default is None
        with pytest.raises(TypeError):
            Table.from_params(Params({"rows": ["t1"]}))
