"""Finite determinacy of power series matrices.

Jobs are either the line format read by the ``determinacy-kit`` command or a
JSON object with the same keys.  Reports come back as dictionaries.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from ._core import JobError, job_json, normalize_job, run_job as _run_job

__all__ = [
    "JobError",
    "Result",
    "make_job",
    "normalize_job",
    "parse_job",
    "run",
]


class Result:
    """Exit code plus report of one job."""

    def __init__(self, exit_code: int, report: dict[str, Any]):
        self.exit_code = exit_code
        self.report = report

    @property
    def ok(self) -> bool:
        return self.exit_code == 0

    def __getitem__(self, key: str) -> Any:
        return self.report[key]

    def __repr__(self) -> str:
        return f"Result(exit_code={self.exit_code}, report={self.report!r})"


def make_job(
    characteristic: int,
    variables: Sequence[str],
    matrix: Sequence[Sequence[str]],
    group: str,
    command: str | None = None,
    **options: Any,
) -> str:
    """Build the JSON text of a job."""
    doc: dict[str, Any] = {
        "characteristic": characteristic,
        "vars": list(variables),
        "matrix": [list(row) for row in matrix],
        "group": group,
    }
    if command is not None:
        doc["command"] = command
    if options:
        doc["options"] = options
    return json.dumps(doc)


def parse_job(text: str) -> dict[str, Any]:
    """Validate a job and return its JSON form."""
    return json.loads(job_json(text))


def run(
    job: str,
    command: str | None = None,
    *,
    verify: bool = False,
    jet_level: int | None = None,
    orbit_method: str | None = None,
) -> Result:
    """Run a job; library errors end up in ``report["error"]``."""
    code, text = _run_job(job, command, verify, jet_level, orbit_method)
    return Result(code, json.loads(text))
