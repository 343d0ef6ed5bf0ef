import copy
import json
import logging
from collections.abc import MutableMapping
from pathlib import Path
from typing import Dict, Any, Union, TextIO

from agnostic_hexagon.config.errors import ConfigurationError

logger = logging.getLogger(__name__)

try:
    from _jsonnet import evaluate_file, evaluate_snippet
except ImportError:

    def evaluate_file(filename: str, **kwargs) -> str:
        logger.warning("_jsonnet is not available, reading the file as plain json")
        with open(filename, "r", encoding="utf-8") as infile:
            return infile.read()

    def evaluate_snippet(filename: str, expr: str, **kwargs) -> str:
        logger.warning("_jsonnet is not available, reading the snippet as plain json")
        return expr


class Params(MutableMapping):
    """Configuration tree read from a json or jsonnet document.

    Nested mappings are wrapped in `Params` when accessed, so that
    missing required keys surface as `ConfigurationError`.
    """

    SENTINEL = object()

    def __init__(self, params: Dict[str, Any], base_dir: Union[str, Path, None] = None) -> None:
        self.params = params
        self.base_dir = Path(base_dir) if base_dir is not None else None

    def pop(self, key: str, default: Any = SENTINEL) -> Any:
        if default is self.SENTINEL:
            try:
                value = self.params.pop(key)
            except KeyError:
                raise ConfigurationError(f"Could not find required key: {key}")
        else:
            value = self.params.pop(key, default)
        return self._wrap(value)

    def get(self, key: str, default: Any = SENTINEL) -> Any:
        if default is self.SENTINEL:
            if key not in self.params:
                raise ConfigurationError(f"Could not find required key: {key}")
            value = self.params[key]
        else:
            value = self.params.get(key, default)
        return self._wrap(value)

    def resolve_path(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        if path.is_absolute() or self.base_dir is None:
            return path
        return self.base_dir / path

    def as_dict(self) -> Dict[str, Any]:
        return self.params

    def copy(self) -> "Params":
        return copy.deepcopy(self)

    def assert_empty(self, class_name: str) -> None:
        if self.params:
            raise ConfigurationError(
                f"Could not exhaust all parameters for {class_name}, still got {self.params}."
            )

    def _wrap(self, value: Any) -> Any:
        return _force_value_to_params(value, self.base_dir)

    def __getitem__(self, item):
        if item in self.params:
            return self._wrap(self.params[item])
        raise KeyError(item)

    def __setitem__(self, key, value):
        self.params[key] = value

    def __delitem__(self, key):
        del self.params[key]

    def __iter__(self):
        return iter(self.params)

    def __len__(self):
        return len(self.params)

    @classmethod
    def from_file(cls, file_path: Union[str, Path]) -> "Params":
        file_path = Path(file_path)
        try:
            params = json.loads(evaluate_file(str(file_path)))
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Could not parse {file_path}: {e}")
        if not isinstance(params, dict):
            raise ConfigurationError(f"Expected a json object at the top of {file_path}.")
        return cls(params, base_dir=file_path.parent)

    @classmethod
    def from_stream(cls, stream: TextIO, name: str = "<stdin>") -> "Params":
        try:
            params = json.loads(evaluate_snippet(name, stream.read()))
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Could not parse {name}: {e}")
        if not isinstance(params, dict):
            raise ConfigurationError(f"Expected a json object at the top of {name}.")
        return cls(params, base_dir=Path.cwd())

    def to_file(self, file_path: Union[str, Path]):
        with open(str(file_path), "w", encoding="utf-8") as outfile:
            json.dump(self.as_dict(), outfile, indent=4)

    def __repr__(self):
        return self.params.__repr__()

    def __str__(self):
        return self.params.__str__()


def _force_value_to_params(value: Any, base_dir: Union[Path, None] = None) -> Any:
    if isinstance(value, Params):
        return value
    if isinstance(value, dict):
        value = Params(value, base_dir=base_dir)
    elif isinstance(value, (list, set)):
        value = [_force_value_to_params(v, base_dir) for v in value]
    return value
