import json
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Tuple, Union

from tqdm.auto import tqdm

from agnostic_hexagon.bayes.posterior import Posterior, posterior as condition
from agnostic_hexagon.cli.config import RunConfig
from agnostic_hexagon.cli.render import HexagonState, render_hexagons, render_nested_pairs
from agnostic_hexagon.config import ConfigurationError
from agnostic_hexagon.consistency.checks import (
    check_intersection_consonance,
    check_union_consonance,
    classify,
)
from agnostic_hexagon.consistency.report import ConsistencyReport
from agnostic_hexagon.decisions.cutoff_test import (
    ConsonanceWitness,
    CutoffTest,
    consonance_failure_witness,
)
from agnostic_hexagon.decisions.loss import CutoffPair, LossSpec, expected_losses
from agnostic_hexagon.errors import AgnosticError
from agnostic_hexagon.fbst.evalue import ev
from agnostic_hexagon.fbst.gfbst import FbstTest, GfbstTest
from agnostic_hexagon.fbst.hybrid import cutoff_sweep, hybrid_relations
from agnostic_hexagon.lattice.agnostic_test import AgnosticTest
from agnostic_hexagon.lattice.grid import ParameterGrid
from agnostic_hexagon.lattice.hypothesis import Hypothesis
from agnostic_hexagon.modality.verdict import ALL_MODALITIES, ModalVerdict
from agnostic_hexagon.utils.ops import batch_items

logger = logging.getLogger(__name__)

Labelled = Tuple[str, Hypothesis]


def resolve_hypotheses(
    grid: ParameterGrid, specs: List[Union[List[str], str]]
) -> List[Labelled]:
    """Id lists and predicates as hypotheses on `grid`, labelled as written."""
    resolved = []
    for spec in specs:
        try:
            if isinstance(spec, str):
                resolved.append((spec, Hypothesis.from_predicate(grid, spec)))
            else:
                resolved.append(("{" + ",".join(spec) + "}", Hypothesis.from_ids(grid, spec)))
        except AgnosticError as e:
            raise ConfigurationError(f"Could not resolve hypothesis {spec!r}: {e}") from e
    return resolved


def build_test(config: RunConfig, posterior: Posterior) -> AgnosticTest:
    return config.test.construct(posterior=posterior, grid=posterior.grid)


def prepare(config: RunConfig) -> Tuple[Posterior, AgnosticTest]:
    posterior = condition(config.model, config.observation)
    test = build_test(config, posterior)
    logger.info(f"Conditioned on {config.observation!r}, testing with {test.description}.")
    return posterior, test


def registered_type(test: AgnosticTest) -> str:
    try:
        return AgnosticTest.get_type(type(test))
    except KeyError:
        return "rule"


def evaluate_row(
    test: AgnosticTest, label: str, hypothesis: Hypothesis, posterior: Posterior
) -> Dict[str, Any]:
    verdict = test(hypothesis)
    grid = posterior.grid
    row: Dict[str, Any] = {
        "hypothesis": hypothesis.ids(grid),
        "label": label,
        "posterior_prob": float(posterior.prob(hypothesis)),
        "verdict": str(verdict),
        "numeric": verdict.numeric,
        "modalities": [str(m) for m in ALL_MODALITIES if m.holds(verdict)],
    }
    if isinstance(test, CutoffTest) and test.loss is not None:
        losses = expected_losses(row["posterior_prob"], test.loss)
        row["expected_losses"] = {str(action): float(value) for action, value in losses.items()}
    if isinstance(test, (FbstTest, GfbstTest)):
        own = ev(test.posterior, test.profile, hypothesis)
        row["ev"] = float(own.value)
        row["ev_complement"] = float(ev(test.posterior, test.profile, ~hypothesis).value)
        row["tangent_set"] = own.tangent_set.ids(grid)
    if isinstance(test, GfbstTest) and test.config.bridges_probability:
        record = hybrid_relations(test.posterior, test.profile, test.config, hypothesis)
        row["probabilistic_modalities"] = [
            str(m) for m, holds in record.probabilistic_assignment().items() if holds
        ]
    return row


def evaluate_rows(
    test: AgnosticTest,
    posterior: Posterior,
    hypotheses: List[Labelled],
    num_workers: Optional[int] = None,
    batch_size: int = 64,
    progress: bool = False,
) -> List[Dict[str, Any]]:
    """Rows in the order of `hypotheses`, whatever the order in which they complete."""
    def row(labelled: Labelled) -> Dict[str, Any]:
        return evaluate_row(test, labelled[0], labelled[1], posterior)

    rows = []
    batches = tqdm(
        list(batch_items(hypotheses, batch_size)),
        desc="Evaluating hypotheses",
        disable=not progress,
    )
    if num_workers == 0:
        for batch in batches:
            rows.extend(row(labelled) for labelled in batch)
        return rows
    with ThreadPoolExecutor(max_workers=num_workers) as executor:
        for batch in batches:
            rows.extend(executor.map(row, batch))
    return rows


def _sweep_section(
    test: AgnosticTest, hypotheses: List[Labelled], cutoffs: List[float]
) -> List[Dict[str, Any]]:
    if not isinstance(test, (FbstTest, GfbstTest)):
        raise ConfigurationError("A cutoff sweep needs an fbst or gfbst test.")
    grid = test.posterior.grid
    return [
        {
            "hypothesis": hypothesis.ids(grid),
            "label": label,
            "rows": [
                row.to_dict()
                for row in cutoff_sweep(test.posterior, test.profile, hypothesis, cutoffs)
            ],
        }
        for label, hypothesis in hypotheses
    ]


def run(config: RunConfig) -> Dict[str, Any]:
    """Verdicts of every configured hypothesis, as a json-ready report."""
    posterior, test = prepare(config)
    grid = posterior.grid
    hypotheses = resolve_hypotheses(grid, config.hypotheses)
    report: Dict[str, Any] = {
        "model": {
            "type": type(config.model).__name__,
            "grid": grid.ids,
            "observation": config.observation,
        },
        "test": {"type": registered_type(test), "description": test.description},
        "posterior": {
            point_id: float(mass) for point_id, mass in zip(grid.ids, posterior.masses)
        },
        "seed": config.seed,
        "rows": evaluate_rows(
            test,
            posterior,
            hypotheses,
            num_workers=config.num_workers,
            batch_size=config.batch_size,
            progress=config.progress,
        ),
    }
    if config.sweep:
        report["sweep"] = _sweep_section(test, hypotheses, config.sweep)
    return report


def report_to_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def report_to_text(report: Dict[str, Any]) -> str:
    model = report["model"]
    lines = [
        f"model: {model['type']} on {len(model['grid'])} points, observation {model['observation']!r}",
        f"test: {report['test']['description']}",
        f"{'hypothesis':<24} {'p(H|x)':>10}  {'verdict':<9} modalities",
    ]
    for row in report["rows"]:
        line = (
            f"{row['label']:<24} {row['posterior_prob']:>10.6g}  {row['verdict']:<9} "
            f"{' '.join(row['modalities'])}"
        )
        if "ev" in row:
            line += f"  ev={row['ev']:.6g} ev~={row['ev_complement']:.6g}"
        lines.append(line)
    for section in report.get("sweep", []):
        lines.append(f"cutoff sweep of {section['label']}:")
        for row in section["rows"]:
            lines.append(
                f"  c={row['c']:<8g} H: {row['verdict']:<9} complement: {row['complement_verdict']}"
            )
    return "\n".join(lines) + "\n"


def report_to_svg(report: Dict[str, Any]) -> str:
    states = [
        HexagonState.from_verdict(ModalVerdict.from_value(row["verdict"]), label=row["label"])
        for row in report["rows"]
    ]
    return render_hexagons(states, format="svg")


def render_report(report: Dict[str, Any], output: str) -> str:
    if output == "json":
        return report_to_json(report)
    if output == "text":
        return report_to_text(report)
    return report_to_svg(report)


def check(config: RunConfig) -> Tuple[ConsistencyReport, ParameterGrid]:
    _, test = prepare(config)
    report = classify(test, seed=config.seed, trials=config.trials, progress=config.progress)
    return report, test.grid


def hexagon_states(
    config: RunConfig, nested: bool = False
) -> List[Tuple[HexagonState, Optional[HexagonState]]]:
    """Alethic state of every hypothesis, paired with its probabilistic state when nested."""
    posterior, test = prepare(config)
    pairs = []
    for label, hypothesis in resolve_hypotheses(posterior.grid, config.hypotheses):
        if not nested:
            pairs.append((HexagonState.from_verdict(test(hypothesis), label=label), None))
            continue
        if not isinstance(test, GfbstTest):
            raise ConfigurationError("Nested hexagons need a gfbst test.")
        record = hybrid_relations(test.posterior, test.profile, test.config, hypothesis)
        pairs.append(
            (
                HexagonState(label, record.alethic_assignment(), "alethic"),
                HexagonState(label, record.probabilistic_assignment(), "probabilistic"),
            )
        )
    return pairs


def render_states(
    pairs: List[Tuple[HexagonState, Optional[HexagonState]]], format: str
) -> str:
    if all(inner is None for _, inner in pairs):
        return render_hexagons([outer for outer, _ in pairs], format=format)
    return render_nested_pairs(pairs, format=format)


def demo_consonance_failure(
    cuts: Optional[CutoffPair] = None,
    loss: Optional[LossSpec] = None,
    n: Optional[int] = None,
) -> Tuple[ConsonanceWitness, Dict[str, Any]]:
    """Builds the witness for the given cutoffs, or for those of a loss, and re-checks it."""
    if (cuts is None) == (loss is None):
        raise ConfigurationError("The demonstration takes either cutoffs or a loss.")
    if cuts is None:
        cuts = CutoffPair.from_loss(loss)
    witness = consonance_failure_witness(cuts, n)
    test = witness.test
    union = check_union_consonance(test)
    intersection = check_intersection_consonance(test)
    grid = witness.grid
    summary = {
        "c1": cuts.c1,
        "c2": cuts.c2,
        "n": grid.size,
        "partition": [
            {"part": part.ids(grid), "probability": float(p), "verdict": str(v)}
            for part, p, v in zip(
                witness.partition, witness.part_probabilities, witness.part_verdicts
            )
        ],
        "theta_verdict": str(witness.theta_verdict),
        "union_consonance": union.to_dict(grid),
        "intersection_consonance": intersection.to_dict(grid),
        "failed": [result.name for result in (union, intersection) if not result.passed],
    }
    return witness, summary


def witness_to_text(summary: Dict[str, Any]) -> str:
    lines = [
        f"posterior cutoffs c1={summary['c1']:g}, c2={summary['c2']:g} "
        f"on {summary['n']} equally likely points"
    ]
    for part in summary["partition"]:
        lines.append(
            f"  {{{','.join(part['part'])}}}  p={part['probability']:.6g}  {part['verdict']}"
        )
    lines.append(f"  Θ  p=1  {summary['theta_verdict']}")
    for name in ("union_consonance", "intersection_consonance"):
        result = summary[name]
        status = "holds" if result["passed"] else "fails"
        line = f"{name.replace('_', ' ')} {status}"
        if result["counterexample"] is not None:
            sets = ", ".join("{" + ",".join(ids) + "}" for ids in result["counterexample"])
            line += f": {sets} -> {', '.join(result['verdicts'])}"
        lines.append(line)
    return "\n".join(lines) + "\n"
