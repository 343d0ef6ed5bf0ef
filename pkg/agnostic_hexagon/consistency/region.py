import logging
from typing import Optional

from agnostic_hexagon.consistency.checks import classify, memoize, search
from agnostic_hexagon.consistency.report import CheckResult, ConsistencyReport
from agnostic_hexagon.consistency.sampler import (
    DEFAULT_TRIALS,
    EXHAUSTIVE_SINGLE_LIMIT,
    CheckMode,
    HypothesisSampler,
    choose_mode,
    exhaustive_hypotheses,
)
from agnostic_hexagon.errors import InconsistentTestError
from agnostic_hexagon.lattice.agnostic_test import AgnosticTest
from agnostic_hexagon.lattice.hypothesis import Hypothesis, check_exhaustive_size
from agnostic_hexagon.modality.verdict import ModalVerdict

logger = logging.getLogger(__name__)


def extract_region(
    test: AgnosticTest,
    report: Optional[ConsistencyReport] = None,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
) -> Hypothesis:
    """Region estimator of a logically consistent test: the points whose singleton is possible."""
    report = report or classify(test, seed=seed, trials=trials)
    if not report.overall:
        failed = [result.name for result in report.failures]
        raise InconsistentTestError(
            f"{test.description} is not logically consistent (fails {failed}), "
            "it has no region estimator."
        )
    verdict = memoize(test)
    size = test.grid.size
    region = Hypothesis.from_indices(
        (i for i in range(size) if verdict(Hypothesis(1 << i, size)) is not ModalVerdict.REJECT),
        size,
    )
    if size <= EXHAUSTIVE_SINGLE_LIMIT:
        oracle = extract_region_by_intersection(test)
        if oracle != region:
            raise InconsistentTestError(
                f"Possible singletons {region.ids(test.grid)} differ from the intersection "
                f"of accepted hypotheses {oracle.ids(test.grid)}."
            )
    return region


def extract_region_by_intersection(test: AgnosticTest) -> Hypothesis:
    """Intersection of every accepted hypothesis."""
    size = test.grid.size
    check_exhaustive_size(size, EXHAUSTIVE_SINGLE_LIMIT)
    verdict = memoize(test)
    mask = (1 << size) - 1
    accepted = 0
    for hypothesis in exhaustive_hypotheses(size):
        if verdict(hypothesis) is ModalVerdict.ACCEPT:
            mask &= hypothesis.mask
            accepted += 1
    if accepted == 0:
        raise InconsistentTestError(f"{test.description} accepts no hypothesis.")
    return Hypothesis(mask, size)


def verify_representation(
    test: AgnosticTest,
    region: Hypothesis,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
) -> CheckResult:
    region.check_grid(test.grid)
    size = test.grid.size
    mode = choose_mode(size, EXHAUSTIVE_SINGLE_LIMIT)
    if mode is CheckMode.EXHAUSTIVE:
        hypotheses = exhaustive_hypotheses(size)
    else:
        logger.warning(f"Verifying the representation on {trials} sampled hypotheses.")
        hypotheses = HypothesisSampler(size, seed, trials).hypotheses()
    return search(
        "representation",
        memoize(test),
        ((region, hypothesis) for hypothesis in hypotheses),
        mode,
        note=f"region {region.ids(test.grid)}",
    )
