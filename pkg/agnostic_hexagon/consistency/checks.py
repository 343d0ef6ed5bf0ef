import itertools
import logging
from functools import lru_cache
from typing import Callable, Dict, Iterable, Optional, Tuple

from tqdm.auto import tqdm

from agnostic_hexagon.consistency.report import CheckResult, ConsistencyReport
from agnostic_hexagon.consistency.sampler import (
    DEFAULT_TRIALS,
    EXHAUSTIVE_PAIR_LIMIT,
    EXHAUSTIVE_SINGLE_LIMIT,
    CheckMode,
    HypothesisSampler,
    choose_mode,
    exhaustive_hypotheses,
    exhaustive_nested_pairs,
)
from agnostic_hexagon.lattice.agnostic_test import AgnosticTest, region_test_evaluate
from agnostic_hexagon.lattice.hypothesis import Hypothesis
from agnostic_hexagon.modality.verdict import (
    Modality,
    ModalVerdict,
    invertibility_image,
)

logger = logging.getLogger(__name__)

Verdicts = Optional[Tuple[ModalVerdict, ...]]
VerdictFn = Callable[[Hypothesis], ModalVerdict]

ACCEPT, REJECT = ModalVerdict.ACCEPT, ModalVerdict.REJECT

# (modality of H, modality of its complement) that must hold together
PRISM_EQUIVALENCES: Tuple[Tuple[Modality, Modality], ...] = (
    (Modality.A, Modality.E),
    (Modality.E, Modality.A),
    (Modality.I, Modality.O),
    (Modality.O, Modality.I),
    (Modality.U, Modality.U),
    (Modality.Y, Modality.Y),
)


def memoize(test) -> VerdictFn:
    """Caches verdicts per hypothesis; the checks evaluate the same sets repeatedly."""
    if hasattr(test, "cache_info"):
        return test
    return lru_cache(maxsize=None)(test.evaluate)


def invertibility_violation(verdict: VerdictFn, hypothesis: Hypothesis) -> Verdicts:
    own, other = verdict(hypothesis), verdict(~hypothesis)
    if other is not invertibility_image(own):
        return own, other
    return None


def monotonicity_violation(
    verdict: VerdictFn, smaller: Hypothesis, larger: Hypothesis
) -> Verdicts:
    if not smaller.is_subset(larger):
        return None
    small, large = verdict(smaller), verdict(larger)
    if (small is ACCEPT and large is not ACCEPT) or (small is not REJECT and large is REJECT):
        return small, large
    return None


def union_consonance_violation(
    verdict: VerdictFn, first: Hypothesis, second: Hypothesis
) -> Verdicts:
    left, right = verdict(first), verdict(second)
    if left is REJECT and right is REJECT:
        union = verdict(first | second)
        if union is not REJECT:
            return left, right, union
    return None


def intersection_consonance_violation(
    verdict: VerdictFn, first: Hypothesis, second: Hypothesis
) -> Verdicts:
    left, right = verdict(first), verdict(second)
    if left is ACCEPT and right is ACCEPT:
        intersection = verdict(first & second)
        if intersection is not ACCEPT:
            return left, right, intersection
    return None


def accepts_theta_violation(verdict: VerdictFn, theta: Hypothesis) -> Verdicts:
    result = verdict(theta)
    return None if result is ACCEPT else (result,)


def transitivity_violation(verdict: VerdictFn, hypothesis: Hypothesis) -> Verdicts:
    own, other = verdict(hypothesis), verdict(~hypothesis)
    if (own is REJECT and other is not ACCEPT) or (own is ACCEPT and other is not REJECT):
        return own, other
    return None


def prism_violation(verdict: VerdictFn, hypothesis: Hypothesis) -> Verdicts:
    own, other = verdict(hypothesis), verdict(~hypothesis)
    for modality, image in PRISM_EQUIVALENCES:
        if modality.holds(own) != image.holds(other):
            return own, other
    return None


def representation_violation(
    verdict: VerdictFn, region: Hypothesis, hypothesis: Hypothesis
) -> Verdicts:
    own = verdict(hypothesis)
    if region.is_empty:
        # an empty region induces no test
        return (own,)
    expected = region_test_evaluate(region, hypothesis)
    if own is not expected:
        return own, expected
    return None


def nand_violation(verdict: VerdictFn, first: Hypothesis, second: Hypothesis) -> Verdicts:
    left, right = verdict(first), verdict(second)
    joint = verdict(~(first & second))
    if (joint is ACCEPT) != (not (left is ACCEPT and right is ACCEPT)):
        return left, right, joint
    return None


VIOLATIONS: Dict[str, Callable[..., Verdicts]] = {
    "invertibility": invertibility_violation,
    "monotonicity": monotonicity_violation,
    "union_consonance": union_consonance_violation,
    "intersection_consonance": intersection_consonance_violation,
    "accepts_theta": accepts_theta_violation,
    "transitivity_chains": transitivity_violation,
    "invertibility_prism": prism_violation,
    "representation": representation_violation,
    "nand_lemma": nand_violation,
}


def search(
    name: str,
    verdict: VerdictFn,
    cases: Iterable[Tuple[Hypothesis, ...]],
    mode: CheckMode,
    note: str = "",
    violation: Optional[Callable[..., Verdicts]] = None,
) -> CheckResult:
    custom = violation
    violation = violation or VIOLATIONS[name]
    checked = 0
    for case in cases:
        checked += 1
        verdicts = violation(verdict, *case)
        if verdicts is not None:
            return CheckResult(
                name, False, mode, checked, tuple(case), verdicts, note, violation=custom
            )
    return CheckResult(name, True, mode, checked, note=note, violation=custom)


def _single_cases(
    test: AgnosticTest, seed: int, trials: int, name: str
) -> Tuple[Iterable[Tuple[Hypothesis]], CheckMode]:
    size = test.grid.size
    mode = choose_mode(size, EXHAUSTIVE_SINGLE_LIMIT)
    if mode is CheckMode.EXHAUSTIVE:
        hypotheses = exhaustive_hypotheses(size)
    else:
        logger.warning(
            f"Checking {name} on {trials} sampled hypotheses (seed {seed}), "
            f"the grid has {size} points."
        )
        hypotheses = HypothesisSampler(size, seed, trials).hypotheses()
    return ((hypothesis,) for hypothesis in hypotheses), mode


def check_invertibility(
    test: AgnosticTest,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    verdict: Optional[VerdictFn] = None,
) -> CheckResult:
    cases, mode = _single_cases(test, seed, trials, "invertibility")
    return search("invertibility", verdict or memoize(test), cases, mode)


def check_monotonicity(
    test: AgnosticTest,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    verdict: Optional[VerdictFn] = None,
) -> CheckResult:
    size = test.grid.size
    mode = choose_mode(size, EXHAUSTIVE_PAIR_LIMIT)
    if mode is CheckMode.EXHAUSTIVE:
        cases = exhaustive_nested_pairs(size)
    else:
        logger.warning(f"Checking monotonicity on {trials} sampled nested pairs (seed {seed}).")
        cases = HypothesisSampler(size, seed, trials).nested_pairs()
    return search("monotonicity", verdict or memoize(test), cases, mode)


def _consonance(
    name: str,
    target: ModalVerdict,
    test: AgnosticTest,
    seed: int,
    trials: int,
    verdict: Optional[VerdictFn],
) -> CheckResult:
    verdict = verdict or memoize(test)
    size = test.grid.size
    mode = choose_mode(size, EXHAUSTIVE_PAIR_LIMIT)
    if mode is CheckMode.EXHAUSTIVE:
        decided = [h for h in exhaustive_hypotheses(size) if verdict(h) is target]
        cases = itertools.combinations_with_replacement(decided, 2)
    else:
        logger.warning(f"Checking {name} on {trials} sampled pairs (seed {seed}).")
        cases = HypothesisSampler(size, seed, trials).pairs()
    return search(name, verdict, cases, mode)


def check_union_consonance(
    test: AgnosticTest,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    verdict: Optional[VerdictFn] = None,
) -> CheckResult:
    """Rejection must be closed under pairwise union."""
    return _consonance("union_consonance", REJECT, test, seed, trials, verdict)


def check_intersection_consonance(
    test: AgnosticTest,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    verdict: Optional[VerdictFn] = None,
) -> CheckResult:
    """Acceptance must be closed under pairwise intersection."""
    return _consonance("intersection_consonance", ACCEPT, test, seed, trials, verdict)


def check_accepts_theta(
    test: AgnosticTest, verdict: Optional[VerdictFn] = None, **kwargs
) -> CheckResult:
    theta = Hypothesis.full(test.grid.size)
    return search("accepts_theta", verdict or memoize(test), [(theta,)], CheckMode.EXHAUSTIVE)


def check_transitivity_chains(
    test: AgnosticTest,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    verdict: Optional[VerdictFn] = None,
) -> CheckResult:
    """Rejecting H must accept its complement and accepting H must reject it."""
    cases, mode = _single_cases(test, seed, trials, "transitivity chains")
    return search("transitivity_chains", verdict or memoize(test), cases, mode)


def check_invertibility_prism(
    test: AgnosticTest,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    verdict: Optional[VerdictFn] = None,
) -> CheckResult:
    verdict = verdict or memoize(test)
    cases, mode = _single_cases(test, seed, trials, "the invertibility prism")
    result = search("invertibility_prism", verdict, cases, mode)
    if result.passed:
        return result
    own, other = result.verdicts
    broken = [
        f"{modality}(H) ⇔ {image}(H̃)"
        for modality, image in PRISM_EQUIVALENCES
        if modality.holds(own) != image.holds(other)
    ]
    return CheckResult(
        result.name,
        False,
        result.mode,
        result.checked,
        result.counterexample,
        result.verdicts,
        note="broken: " + ", ".join(broken),
    )


def classify(
    test: AgnosticTest,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    progress: bool = False,
) -> ConsistencyReport:
    verdict = memoize(test)
    checks = [
        ("invertibility", check_invertibility),
        ("monotonicity", check_monotonicity),
        ("union_consonance", check_union_consonance),
        ("intersection_consonance", check_intersection_consonance),
        ("accepts_theta", check_accepts_theta),
    ]
    results = {}
    for name, check in tqdm(checks, desc="Consistency checks", disable=not progress):
        results[name] = check(test, seed=seed, trials=trials, verdict=verdict)
    report = ConsistencyReport(seed=seed, trials=trials, **results)
    logger.info(
        f"{test.description}: {'consistent' if report.overall else 'inconsistent'} "
        f"({report.mode})"
    )
    return report
