import itertools
import logging
from dataclasses import dataclass
from typing import Mapping

from agnostic_hexagon.consistency.checks import memoize, search
from agnostic_hexagon.consistency.report import CheckResult
from agnostic_hexagon.consistency.sampler import (
    EXHAUSTIVE_PAIR_LIMIT,
    CheckMode,
    exhaustive_hypotheses,
)
from agnostic_hexagon.errors import PreconditionError
from agnostic_hexagon.lattice.agnostic_test import AgnosticTest
from agnostic_hexagon.lattice.expressions import Connectives, parse_formula
from agnostic_hexagon.lattice.hypothesis import Hypothesis, check_exhaustive_size, nand
from agnostic_hexagon.modality.verdict import ModalVerdict

logger = logging.getLogger(__name__)


def _require_decided(test: AgnosticTest, verdict, named: Mapping[str, Hypothesis]) -> None:
    undecided = [
        name
        for name, hypothesis in named.items()
        if verdict(hypothesis) is ModalVerdict.AGNOSTIC
    ]
    if undecided:
        raise PreconditionError(
            f"{test.description} leaves {undecided} undecided, deduction needs decided hypotheses."
        )


def check_nand_lemma(test: AgnosticTest, first: Hypothesis, second: Hypothesis) -> CheckResult:
    """Compares □(H1 ↑ H2) with □H1 ↑ □H2 for two decided hypotheses.

    The test is assumed to be logically consistent; run `classify` first
    when that is not known.
    """
    verdict = memoize(test)
    _require_decided(test, verdict, {"H1": first, "H2": second})
    return search("nand_lemma", verdict, [(first, second)], CheckMode.EXHAUSTIVE)


def check_nand_lemma_exhaustive(test: AgnosticTest) -> CheckResult:
    """The nand lemma over every pair of decided hypotheses."""
    size = test.grid.size
    check_exhaustive_size(size, EXHAUSTIVE_PAIR_LIMIT)
    verdict = memoize(test)
    decided = [h for h in exhaustive_hypotheses(size) if verdict(h) is not ModalVerdict.AGNOSTIC]
    return search(
        "nand_lemma",
        verdict,
        itertools.combinations_with_replacement(decided, 2),
        CheckMode.EXHAUSTIVE,
    )


class SetConnectives(Connectives):
    """Reads a formula as a set built from hypotheses."""

    def negate(self, value: Hypothesis) -> Hypothesis:
        return ~value

    def combine(self, connective: str, left: Hypothesis, right: Hypothesis) -> Hypothesis:
        if connective == "and":
            return left & right
        if connective == "or":
            return left | right
        return nand(left, right)


@dataclass(frozen=True)
class Deduction:
    formula: str
    hypothesis: Hypothesis
    verdict: ModalVerdict
    predicted: bool

    @property
    def accepted(self) -> bool:
        return self.verdict is ModalVerdict.ACCEPT

    @property
    def holds(self) -> bool:
        return self.accepted == self.predicted


def deduce(test: AgnosticTest, formula: str, hypotheses: Mapping[str, Hypothesis]) -> Deduction:
    """Evaluates a formula over decided hypotheses in two ways.

    The set the formula builds is tested directly, and the same formula is
    evaluated on the truth values of □H1, …, □Hn. On a logically consistent
    test the two agree, nand being functionally complete.
    """
    verdict = memoize(test)
    _require_decided(test, verdict, hypotheses)
    node = parse_formula(formula)
    built = node.evaluate(SetConnectives(hypotheses))
    predicted = node.evaluate(
        Connectives({name: verdict(h) is ModalVerdict.ACCEPT for name, h in hypotheses.items()})
    )
    deduction = Deduction(formula, built, verdict(built), bool(predicted))
    if not deduction.holds:
        logger.warning(
            f"{formula}: the built set is {deduction.verdict} but the connectives predict "
            f"{'acceptance' if predicted else 'no acceptance'}."
        )
    return deduction
