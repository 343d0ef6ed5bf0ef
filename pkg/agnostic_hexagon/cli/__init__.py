from agnostic_hexagon.cli.render import *
from agnostic_hexagon.cli.config import *
from agnostic_hexagon.cli.runner import *

__all__ = [
    "HexagonState",
    "render_hexagon",
    "render_hexagons",
    "render_nested",
    "render_nested_pairs",
    "RunConfig",
    "load_config",
    "apply_overrides",
    "run",
    "check",
    "demo_consonance_failure",
    "hexagon_states",
    "render_report",
    "report_to_json",
]
