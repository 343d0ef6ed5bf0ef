import json
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from agnostic_hexagon.consistency.sampler import CheckMode
from agnostic_hexagon.lattice.grid import ParameterGrid
from agnostic_hexagon.lattice.hypothesis import Hypothesis
from agnostic_hexagon.modality.verdict import ModalVerdict

CONSONANCE_REDUCTION = (
    "consonance is checked on pairs; closure over finite families follows by induction"
)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one property check.

    A failed check keeps the hypotheses that violate the property, in the
    order its violation predicate expects them, so it can be replayed.
    """

    name: str
    passed: bool
    mode: CheckMode = CheckMode.EXHAUSTIVE
    checked: int = 0
    counterexample: Optional[Tuple[Hypothesis, ...]] = None
    verdicts: Optional[Tuple[ModalVerdict, ...]] = None
    note: str = ""
    violation: Optional[Callable] = field(default=None, compare=False, repr=False)

    def __bool__(self):
        return self.passed

    def replay(self, test) -> bool:
        """True when the recorded counterexample still violates the property."""
        if self.passed or self.counterexample is None:
            return False
        from agnostic_hexagon.consistency.checks import VIOLATIONS, memoize

        violation = self.violation or VIOLATIONS[self.name]
        return violation(memoize(test), *self.counterexample) is not None

    def to_dict(self, grid: ParameterGrid) -> Dict[str, Any]:
        return {
            "check": self.name,
            "passed": self.passed,
            "mode": str(self.mode),
            "checked": self.checked,
            "counterexample": None
            if self.counterexample is None
            else [hypothesis.ids(grid) for hypothesis in self.counterexample],
            "verdicts": None
            if self.verdicts is None
            else [str(verdict) for verdict in self.verdicts],
            "note": self.note,
        }


@dataclass(frozen=True)
class ConsistencyReport:
    invertibility: CheckResult
    monotonicity: CheckResult
    union_consonance: CheckResult
    intersection_consonance: CheckResult
    accepts_theta: CheckResult
    seed: int = 0
    trials: int = 0
    notes: Tuple[str, ...] = field(default=(CONSONANCE_REDUCTION,))

    @property
    def results(self) -> List[CheckResult]:
        return [
            self.invertibility,
            self.monotonicity,
            self.union_consonance,
            self.intersection_consonance,
            self.accepts_theta,
        ]

    @property
    def overall(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def mode(self) -> CheckMode:
        if all(result.mode is CheckMode.EXHAUSTIVE for result in self.results):
            return CheckMode.EXHAUSTIVE
        return CheckMode.SAMPLED

    @property
    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def replay(self, test) -> Dict[str, bool]:
        return {result.name: result.replay(test) for result in self.failures}

    def to_dict(self, grid: ParameterGrid) -> Dict[str, Any]:
        report = {
            "overall": self.overall,
            "mode": str(self.mode),
            "checks": [result.to_dict(grid) for result in self.results],
            "notes": list(self.notes),
        }
        if self.mode is CheckMode.SAMPLED:
            report["seed"] = self.seed
            report["trials"] = self.trials
        return report

    def to_json(self, grid: ParameterGrid) -> str:
        return json.dumps(self.to_dict(grid), indent=2, ensure_ascii=False)

    def to_text(self, grid: ParameterGrid) -> str:
        lines = [f"logically consistent: {'yes' if self.overall else 'no'} ({self.mode})"]
        for result in self.results:
            line = f"  {result.name:<24} {'pass' if result.passed else 'FAIL'}"
            if result.counterexample is not None:
                sets = ", ".join(
                    "{" + ",".join(h.ids(grid)) + "}" for h in result.counterexample
                )
                verdicts = ", ".join(str(v) for v in result.verdicts or ())
                line += f"  counterexample: {sets}  verdicts: {verdicts}"
            lines.append(line)
        lines.extend(f"  note: {note}" for note in self.notes)
        return "\n".join(lines)
