import logging
import sys
from typing import Any, Dict, List, Optional, Union

from agnostic_hexagon.bayes.model import DiscreteModel
from agnostic_hexagon.config import ConfigurationError, FromParams, Lazy, Params
from agnostic_hexagon.config.from_params import normalize_params
from agnostic_hexagon.consistency.sampler import DEFAULT_TRIALS
from agnostic_hexagon.errors import AgnosticError
from agnostic_hexagon.lattice.agnostic_test import AgnosticTest

# registers the cutoff, fbst and gfbst tests
import agnostic_hexagon.decisions  # noqa: F401
import agnostic_hexagon.fbst  # noqa: F401

logger = logging.getLogger(__name__)

OUTPUTS = ("text", "json", "svg")


class RunConfig(FromParams):
    """A model, one observation, one test and the hypotheses to evaluate.

    `model` may be inline or the path of a model file, relative to the
    configuration. Hypotheses are id lists or predicates over coordinates.
    `sweep` lists e-value cutoffs reported for every hypothesis.
    """

    def __init__(
        self,
        model: DiscreteModel,
        observation: str,
        test: Lazy[AgnosticTest],
        hypotheses: Optional[List[Union[List[str], str]]] = None,
        output: str = "json",
        seed: int = 0,
        trials: int = DEFAULT_TRIALS,
        sweep: Optional[List[float]] = None,
        num_workers: Optional[int] = None,
        batch_size: int = 64,
        progress: bool = False,
    ):
        if output not in OUTPUTS:
            raise ConfigurationError(f"Unknown output {output!r}, available: {list(OUTPUTS)}")
        if seed < 0:
            raise ConfigurationError(f"The seed must be non-negative, got {seed}.")
        if trials < 1:
            raise ConfigurationError(f"At least one trial is needed, got {trials}.")
        if batch_size < 1:
            raise ConfigurationError(f"The batch size must be positive, got {batch_size}.")
        self.model = model
        self.observation = str(observation)
        self.test = test
        self.hypotheses = hypotheses or []
        self.output = output
        self.seed = seed
        self.trials = trials
        self.sweep = sweep
        self.num_workers = num_workers
        self.batch_size = batch_size
        self.progress = progress

    @classmethod
    def from_params(cls, params: Union[Params, Dict, str], **extras) -> "RunConfig":
        params = normalize_params(params)
        model = params.get("model", None)
        if isinstance(model, str):
            params["model"] = Params.from_file(params.resolve_path(model))
        return super().from_params(params, **extras)


def apply_overrides(params: Params, overrides: Dict[str, Any]) -> Params:
    """Command-line values replace those of the configuration.

    Keys `a`, `b`, `c1`, `c2`, `c`, `tie_tolerance` and `reference` go to the
    test, the others to the run itself.
    """
    test_keys = {"a", "b", "c1", "c2", "c", "tie_tolerance", "reference"}
    overrides = {key: value for key, value in overrides.items() if value is not None}
    test_overrides = {key: value for key, value in overrides.items() if key in test_keys}
    if test_overrides:
        test = params.get("test", None)
        if not isinstance(test, Params):
            raise ConfigurationError("Test options need a test object in the configuration.")
        if {"a", "b"} & test_overrides.keys():
            test.pop("c1", None)
            test.pop("c2", None)
        if {"c1", "c2"} & test_overrides.keys():
            test.pop("a", None)
            test.pop("b", None)
        test.update(test_overrides)
    for key, value in overrides.items():
        if key not in test_keys:
            params[key] = value
    return params


def read_params(path: Optional[str]) -> Params:
    try:
        if path is None or path == "-":
            return Params.from_stream(sys.stdin)
        return Params.from_file(path)
    except (OSError, RuntimeError) as e:
        raise ConfigurationError(f"Could not read {path or '<stdin>'}: {e}") from e


def load_config(path: Optional[str], overrides: Optional[Dict[str, Any]] = None) -> RunConfig:
    """Reads a run configuration from `path`, or standard input when it is None or "-"."""
    params = apply_overrides(read_params(path), overrides or {})
    try:
        return RunConfig.from_params(params)
    except (AgnosticError, OSError, RuntimeError, TypeError, ValueError) as e:
        raise ConfigurationError(f"Invalid run configuration: {e}") from e
