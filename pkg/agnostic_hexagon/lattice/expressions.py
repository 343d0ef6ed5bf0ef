"""Small grammars for hypotheses given as text.

Predicates select grid points by their coordinates, e.g. ``x0 <= 0.5 and not x1 == 0``.
Formulas combine named hypotheses with the classical connectives, e.g.
``H1 nand (H2 or not H3)``; they can be evaluated either over sets or over
truth values, which is what the deduction over decided hypotheses compares.
"""
import math
import operator
from functools import lru_cache
from typing import Callable, Dict, Mapping, Sequence, Any

import pyparsing as pp

from agnostic_hexagon.errors import AgnosticError

EQUALITY_TOLERANCE = 1e-12


class ExpressionError(AgnosticError, ValueError):
    pass


_COMPARATORS: Dict[str, Callable[[float, float], bool]] = {
    "==": lambda a, b: math.isclose(a, b, rel_tol=0.0, abs_tol=EQUALITY_TOLERANCE),
    "!=": lambda a, b: not math.isclose(a, b, rel_tol=0.0, abs_tol=EQUALITY_TOLERANCE),
    "<=": operator.le,
    ">=": operator.ge,
    "<": operator.lt,
    ">": operator.gt,
}


class Node:
    def evaluate(self, env: Any) -> Any:
        raise NotImplementedError


class Coordinate(Node):
    def __init__(self, index: int):
        self.index = index

    def evaluate(self, coord: Sequence[float]) -> float:
        if self.index >= len(coord):
            raise ExpressionError(
                f"Coordinate x{self.index} does not exist for a point with {len(coord)} coordinates."
            )
        return coord[self.index]


class Constant(Node):
    def __init__(self, value: float):
        self.value = float(value)

    def evaluate(self, coord: Sequence[float]) -> float:
        return self.value


class Comparison(Node):
    def __init__(self, left: Node, comparator: str, right: Node):
        self.left = left
        self.comparator = comparator
        self.right = right

    def evaluate(self, coord: Sequence[float]) -> bool:
        return _COMPARATORS[self.comparator](
            self.left.evaluate(coord), self.right.evaluate(coord)
        )


class Name(Node):
    def __init__(self, name: str):
        self.name = name

    def evaluate(self, env: "Connectives") -> Any:
        return env.lookup(self.name)


class Not(Node):
    def __init__(self, operand: Node):
        self.operand = operand

    def evaluate(self, env: Any) -> Any:
        value = self.operand.evaluate(env)
        if isinstance(env, Connectives):
            return env.negate(value)
        return not value


class Binary(Node):
    def __init__(self, connective: str, operands: Sequence[Node]):
        self.connective = connective
        self.operands = list(operands)

    def evaluate(self, env: Any) -> Any:
        values = [operand.evaluate(env) for operand in self.operands]
        if isinstance(env, Connectives):
            combine = env.combine
        else:
            combine = _bool_combine
        result = values[0]
        for value in values[1:]:
            result = combine(self.connective, result, value)
        return result


def _bool_combine(connective: str, left: bool, right: bool) -> bool:
    if connective == "and":
        return left and right
    if connective == "or":
        return left or right
    return not (left and right)


class Connectives:
    """Interpretation of names and connectives for formula evaluation."""

    def __init__(self, values: Mapping[str, Any]):
        self.values = values

    def lookup(self, name: str) -> Any:
        if name not in self.values:
            raise ExpressionError(f"Unknown name {name!r} in formula.")
        return self.values[name]

    def negate(self, value: Any) -> Any:
        return not value

    def combine(self, connective: str, left: Any, right: Any) -> Any:
        return _bool_combine(connective, left, right)


def _binary_action(connective: str):
    def action(tokens):
        operands = tokens[0][0::2]
        return Binary(connective, operands)

    return action


def _not_action(tokens):
    return Not(tokens[0][1])


def _comparison_action(tokens):
    left, comparator, right = tokens[0]
    return Comparison(left, comparator, right)


_NOT = pp.CaselessKeyword("not") | pp.Literal("~")
_AND = pp.CaselessKeyword("and") | pp.Literal("&")
_OR = pp.CaselessKeyword("or") | pp.Literal("|")
_NAND = pp.CaselessKeyword("nand") | pp.Literal("↑")

_number = pp.pyparsing_common.number.copy().set_parse_action(
    lambda tokens: Constant(tokens[0])
)
_coordinate = pp.Regex(r"x(\d+)").set_parse_action(lambda tokens: Coordinate(int(tokens[0][1:])))
_comparison = pp.Group(
    (_coordinate | _number) + pp.one_of(list(_COMPARATORS)) + (_coordinate | _number)
).set_parse_action(_comparison_action)

_KEYWORDS = _NOT | _AND | _OR | _NAND

PREDICATE = pp.infix_notation(
    _comparison,
    [
        (_NOT, 1, pp.OpAssoc.RIGHT, _not_action),
        (_AND, 2, pp.OpAssoc.LEFT, _binary_action("and")),
        (_OR, 2, pp.OpAssoc.LEFT, _binary_action("or")),
    ],
)

_name = (~_KEYWORDS + pp.Word(pp.alphas + "_", pp.alphanums + "_")).set_parse_action(
    lambda tokens: Name(tokens[0])
)

FORMULA = pp.infix_notation(
    _name,
    [
        (_NOT, 1, pp.OpAssoc.RIGHT, _not_action),
        (_AND, 2, pp.OpAssoc.LEFT, _binary_action("and")),
        (_NAND, 2, pp.OpAssoc.LEFT, _binary_action("nand")),
        (_OR, 2, pp.OpAssoc.LEFT, _binary_action("or")),
    ],
)


def _parse(grammar: pp.ParserElement, text: str, kind: str) -> Node:
    try:
        return grammar.parse_string(text.strip(), parse_all=True)[0]
    except pp.ParseException as e:
        raise ExpressionError(f"Could not parse {kind} {text!r}: {e}")


@lru_cache(maxsize=256)
def parse_predicate(text: str) -> Node:
    return _parse(PREDICATE, text, "predicate")


@lru_cache(maxsize=256)
def parse_formula(text: str) -> Node:
    return _parse(FORMULA, text, "formula")
