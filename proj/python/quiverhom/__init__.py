"""Homological invariants of bound quiver algebras."""

import json

from ._core import commands, corpus, corpus_text
from ._core import run as _run

__all__ = ["QuiverhomError", "commands", "corpus", "corpus_text", "run"]

EXIT_CODES = {0: "ok", 1: "user error", 2: "cap reached", 3: "internal error"}


class QuiverhomError(RuntimeError):
    def __init__(self, exit_code, report):
        self.exit_code = exit_code
        self.report = report
        super().__init__(report.get("result", {}).get("message", EXIT_CODES.get(exit_code, str(exit_code))))


def run(command, algebra, *, check=True, **options):
    """Run a command and return its JSON report as a dict.

    With check=True, user and internal errors raise QuiverhomError; a reached
    cap (exit code 2) still returns the report.
    """
    code, text = _run(command, algebra, **options)
    report = json.loads(text)
    report["exit_code"] = code
    if check and code in (1, 3):
        raise QuiverhomError(code, report)
    return report
