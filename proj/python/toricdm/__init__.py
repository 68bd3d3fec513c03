"""Local cohomology of toric rings and graded D-module data."""

import json

from ._core import REPORT_SCHEMA, Presentation, ToricError
from ._core import run as _run

__all__ = ["Presentation", "ToricError", "REPORT_SCHEMA", "run", "run_file"]


def run(command, problem_text, source="<string>"):
    """Run a CLI subcommand on problem text. Returns (report dict, exit code)."""
    text, code = _run(command, problem_text, source)
    return json.loads(text), code


def run_file(command, path):
    with open(path, encoding="utf-8") as f:
        return run(command, f.read(), source=str(path).rsplit("/", 1)[-1])
