"""Minimum-time HJB solvers: fast sweeping, unidirectional sweeping and fast iterative."""

import json

from ._core import (
    ProblemSpec,
    SolverGuardError,
    builtin,
    load_problem,
    methods,
    parse_problem,
    solve,
    table,
)
from ._core import compare as _compare


def compare(spec, methods=("fsm", "ufsm34", "ufsm14", "fim"), n=101, eps=1e-12, tolerance=1e-9):
    """Diff each method against the reference solver; returns the report as a dict."""
    return json.loads(_compare(spec, list(methods), n, eps, tolerance))


__all__ = [
    "ProblemSpec",
    "SolverGuardError",
    "builtin",
    "compare",
    "load_problem",
    "methods",
    "parse_problem",
    "solve",
    "table",
]
