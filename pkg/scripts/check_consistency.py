import argparse
import logging
import os

from agnostic_hexagon.cli.config import RunConfig
from agnostic_hexagon.cli.runner import check
from agnostic_hexagon.config.params import Params

parser = argparse.ArgumentParser(description="Check the logical consistency of a test.")
parser.add_argument(
    "config", type=str, help="The run configuration, with an output_directory entry."
)

logger = logging.getLogger(__name__)

if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    args = parser.parse_args()
    params = Params.from_file(args.config)

    output_dir = params.pop("output_directory")

    os.makedirs(output_dir, exist_ok=True)

    params['progress'] = True

    config = RunConfig.from_params(params)
    report, grid = check(config)

    with open(os.path.join(output_dir, "consistency.json"), "w", encoding="utf-8") as outfile:
        outfile.write(report.to_json(grid) + "\n")
    with open(os.path.join(output_dir, "consistency.txt"), "w", encoding="utf-8") as outfile:
        outfile.write(report.to_text(grid) + "\n")

    logger.info(f"Consistent: {report.overall}, report written to {output_dir}")
