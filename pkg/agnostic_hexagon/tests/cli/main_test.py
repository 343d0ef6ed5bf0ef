import contextlib
import io
import json
import xml.etree.ElementTree as ET
from typing import List, Tuple

from agnostic_hexagon import __version__
from agnostic_hexagon.cli.main import (
    EXIT_CONFIG,
    EXIT_EVALUATION,
    EXIT_INCONSISTENT,
    EXIT_OK,
    main,
)
from agnostic_hexagon.lattice.grid import ParameterGrid
from agnostic_hexagon.tests.agnostic_test_case import AgnosticTestCase

EV_OF_T3 = 0.19999999999999996

GOLDEN_GFBST = {
    "model": {"type": "TabularModel", "grid": ["t1", "t2", "t3"], "observation": "x"},
    "test": {"type": "gfbst", "description": "GFBST c=0.25"},
    "posterior": {"t1": 0.5, "t2": 0.3, "t3": 0.2},
    "seed": 0,
    "rows": [
        {
            "hypothesis": ["t3"],
            "label": "{t3}",
            "posterior_prob": 0.2,
            "verdict": "reject",
            "numeric": 1,
            "modalities": ["E", "O", "U"],
            "ev": EV_OF_T3,
            "ev_complement": 1.0,
            "tangent_set": ["t1", "t2"],
            "probabilistic_modalities": ["E", "O", "U"],
        },
        {
            "hypothesis": ["t1", "t2"],
            "label": "{t1,t2}",
            "posterior_prob": 0.8,
            "verdict": "accept",
            "numeric": 0,
            "modalities": ["A", "I", "U"],
            "ev": 1.0,
            "ev_complement": EV_OF_T3,
            "tangent_set": [],
            "probabilistic_modalities": ["A", "I", "U"],
        },
        {
            "hypothesis": ["t2"],
            "label": "{t2}",
            "posterior_prob": 0.3,
            "verdict": "agnostic",
            "numeric": 0.5,
            "modalities": ["Y", "I", "O"],
            "ev": 0.5,
            "ev_complement": 1.0,
            "tangent_set": ["t1"],
            "probabilistic_modalities": ["Y", "I", "O"],
        },
    ],
}


def call(argv: List[str]) -> Tuple[int, str]:
    stdout = io.StringIO()
    with contextlib.redirect_stdout(stdout):
        code = main(argv)
    return code, stdout.getvalue()


class MainTest(AgnosticTestCase):
    def setUp(self):
        super().setUp()
        self.configs = self.FIXTURES_ROOT / "configs"

    def config(self, name: str) -> str:
        return str(self.configs / name)

    def test_golden_report(self):
        code, output = call(["run", self.config("g3_gfbst.json")])
        assert code == EXIT_OK
        assert output == json.dumps(GOLDEN_GFBST, indent=2, ensure_ascii=False) + "\n"
        assert json.loads(output) == GOLDEN_GFBST

    def test_reparse_is_identical(self):
        _, first = call(["run", self.config("g3_gfbst.json")])
        _, second = call(["run", self.config("g3_gfbst.json")])
        assert first == second
        _, svg = call(["run", self.config("g3_gfbst.json"), "--output", "svg"])
        _, again = call(["run", self.config("g3_gfbst.json"), "--output", "svg"])
        assert svg == again
        assert svg.count('class="hexagon alethic"') == 3

    def test_overrides(self):
        code, output = call(
            ["run", self.config("g3_cutoff.json"), "--c1", "0.9", "--c2", "0.1", "--output", "text"]
        )
        assert code == EXIT_OK
        assert output.splitlines()[1] == "test: posterior cutoff c1=0.9, c2=0.1"
        code, output = call(["run", self.config("g3_gfbst.json"), "--cutoff-c", "0.1"])
        assert json.loads(output)["test"]["description"] == "GFBST c=0.1"

    def test_check(self):
        code, output = call(["check", self.config("g3_gfbst.json"), "--output", "text"])
        assert code == EXIT_OK
        assert output.startswith("logically consistent: yes (exhaustive)")

        code, output = call(["check", self.config("uniform5_cutoff.json")])
        assert code == EXIT_INCONSISTENT
        report = json.loads(output)
        assert report["overall"] is False
        failed = [check["check"] for check in report["checks"] if not check["passed"]]
        assert failed == ["union_consonance", "intersection_consonance"]

        code, _ = call(["check", self.config("g3_gfbst.json"), "--output", "svg"])
        assert code == EXIT_CONFIG

    def test_configuration_errors(self):
        for name in ("bad_type.json", "bad_syntax.jsonnet", "missing.json"):
            code, output = call(["run", self.config(name)])
            assert code == EXIT_CONFIG, name
            assert output == ""
        code, _ = call(["run", self.config("g3_gfbst.json"), "--cutoff-c", "1.5"])
        assert code == EXIT_CONFIG

    def test_evaluation_error(self):
        path = self.TEMPORARY_DIR / "unknown_observation.json"
        path.write_text(
            json.dumps(
                {
                    "model": (self.FIXTURES_ROOT / "g3_model.json").as_posix(),
                    "observation": "z",
                    "test": {"type": "gfbst", "c": 0.25},
                }
            )
        )
        code, output = call(["run", str(path)])
        assert code == EXIT_EVALUATION
        assert output == ""

    def test_hypothesis_probability_near_one(self):
        path = self.TEMPORARY_DIR / "near_one.json"
        path.write_text(
            json.dumps(
                {
                    "model": {
                        "type": "tabular",
                        "grid": ParameterGrid.uniform(6).to_dict(),
                        "likelihood": {"x": [0.04, 0.529, 0.459, 0.062, 0.641, 0.0]},
                    },
                    "observation": "x",
                    "test": {"type": "cutoff", "a": 1, "b": 0.25},
                    "hypotheses": [["t1", "t2", "t3", "t4", "t5"]],
                }
            )
        )
        code, output = call(["run", str(path)])
        assert code == EXIT_OK
        (row,) = json.loads(output)["rows"]
        assert row["posterior_prob"] == 1.0
        assert row["verdict"] == "accept"
        assert row["expected_losses"] == {"accept": 0.0, "agnostic": 0.25, "reject": 1.0}

    def test_demo(self):
        code, output = call(["demo", "consonance-failure", "--c2", "0.25"])
        assert code == EXIT_OK
        assert output.startswith("posterior cutoffs c1=0.75, c2=0.25 on 5 equally likely points\n")
        code, output = call(
            ["demo", "consonance-failure", "--loss-a", "1", "--loss-b", "0.25", "--output", "json"]
        )
        assert code == EXIT_OK
        summary = json.loads(output)
        assert summary["failed"] == ["union_consonance", "intersection_consonance"]
        assert summary["n"] == 5

        code, _ = call(["demo", "consonance-failure", "--c1", "0.75"])
        assert code == EXIT_CONFIG
        code, _ = call(["demo", "consonance-failure", "--loss-a", "1"])
        assert code == EXIT_CONFIG
        code, _ = call(["demo", "consonance-failure", "--loss-a", "1", "--loss-b", "2"])
        assert code == EXIT_CONFIG

    def test_hexagon(self):
        code, output = call(["hexagon", "--verdict", "accept"])
        assert code == EXIT_OK
        assert output.startswith("alethic hexagon of H: accept\n")
        assert "holds: □H ◇H ΔH" in output.splitlines()

        code, output = call(["hexagon", "--verdict", "0.5", "--label", "K", "--output", "svg"])
        assert code == EXIT_OK
        assert "K: agnostic" in output

        code, output = call(["hexagon", self.config("g3_gfbst.json"), "--nested"])
        assert code == EXIT_OK
        assert "nested hexagons of {t1,t2}: outer accept, inner accept" in output

        code, output = call(["hexagon", self.config("g3_gfbst.json"), "--nested", "--output", "svg"])
        assert code == EXIT_OK
        root = ET.fromstring(output)
        assert root.tag == "{http://www.w3.org/2000/svg}svg"
        assert output.count('class="bridges"') == 3
        assert output.count("<svg") == 1

        for argv in (
            ["hexagon", "--verdict", "maybe"],
            ["hexagon"],
            ["hexagon", self.config("g3_gfbst.json"), "--verdict", "accept"],
            ["hexagon", "--verdict", "accept", "--nested"],
            ["hexagon", self.config("g3_cutoff.json"), "--nested"],
        ):
            code, _ = call(argv)
            assert code == EXIT_CONFIG, argv

    def test_version(self):
        code, output = call(["version"])
        assert code == EXIT_OK
        assert output == f"agnostic_hexagon {__version__}\n"
