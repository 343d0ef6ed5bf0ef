import pytest

from agnostic_hexagon.lattice.expressions import (
    Connectives,
    ExpressionError,
    parse_formula,
    parse_predicate,
)
from agnostic_hexagon.lattice.grid import ParameterGrid
from agnostic_hexagon.lattice.hypothesis import Hypothesis
from agnostic_hexagon.tests.agnostic_test_case import AgnosticTestCase


class ExpressionsTest(AgnosticTestCase):
    def setUp(self):
        super().setUp()
        coords = [(0.0, 1.0), (0.5, 0.5), (1.0, 0.0), (0.5, 1.0)]
        self.grid = ParameterGrid.uniform(4, coords=coords)

    def ids(self, predicate: str):
        return Hypothesis.from_predicate(self.grid, predicate).ids(self.grid)

    def test_comparisons(self):
        assert self.ids("x0 == 0.5") == ["t2", "t4"]
        assert self.ids("x0 <= x1") == ["t1", "t2", "t4"]
        assert self.ids("x0 > 0.5") == ["t3"]
        assert self.ids("0.5 < x1") == ["t1", "t4"]
        assert self.ids("x0 != 0.5") == ["t1", "t3"]

    def test_connectives(self):
        assert self.ids("x0 == 0.5 and x1 == 1") == ["t4"]
        assert self.ids("x0 == 0 or x0 == 1") == ["t1", "t3"]
        assert self.ids("not x0 == 0.5") == ["t1", "t3"]
        assert self.ids("~(x0 < 1 & x1 > 0)") == ["t3"]
        assert self.ids("x0 > 2") == []

    def test_equality_tolerance(self):
        grid = ParameterGrid.uniform(2, coords=[(0.1 + 0.2,), (0.3,)])
        assert Hypothesis.from_predicate(grid, "x0 == 0.3").is_full

    def test_bad_predicates(self):
        with pytest.raises(ExpressionError):
            parse_predicate("x0 <=")
        with pytest.raises(ExpressionError):
            parse_predicate("y0 == 1")
        with pytest.raises(ExpressionError):
            self.ids("x2 == 0")

    def test_formulas(self):
        values = Connectives({"H1": True, "H2": False, "H3": True})
        assert parse_formula("H1 nand H2").evaluate(values) is True
        assert parse_formula("H1 ↑ H3").evaluate(values) is False
        assert parse_formula("not H2 and (H1 or H2)").evaluate(values) is True
        assert parse_formula("H1 & ~H3 | H2").evaluate(values) is False
        with pytest.raises(ExpressionError):
            parse_formula("H1 nand").evaluate(values)
        with pytest.raises(ExpressionError):
            parse_formula("H4").evaluate(values)
