"""Varieties of one-dimensional representations of finite W-algebras."""

import json
from dataclasses import dataclass

from . import _walgebra
from ._walgebra import ConsistencyError, InputError

__all__ = [
    "ConsistencyError",
    "InputError",
    "Result",
    "StepError",
    "algebra_info",
    "dimension",
    "groebner",
    "render_text",
    "run_case",
]


class StepError(Exception):
    """A pipeline step rejected its input or failed an internal check."""

    def __init__(self, message, step, exit_code):
        super().__init__(message)
        self.step = step
        self.exit_code = exit_code


@dataclass
class Result:
    report: dict
    verified: bool
    report_json: str


def algebra_info(cartan_type, rank):
    return json.loads(_walgebra.algebra_info(cartan_type, rank))["algebra"]


def run_case(path=None, *, text=None, base_dir=".", polarization=None, claim=None,
             fixed_claim=None, cache_dir=None, jobs=1, last_step=8):
    """Run steps 1..last_step on a case file (or case text)."""
    if (path is None) == (text is None):
        raise ValueError("give exactly one of path and text")
    raw, verified, step, code, message = _walgebra.run(
        path=None if path is None else str(path), text=text, base_dir=str(base_dir),
        polarization=polarization, claim=claim, fixed_claim=fixed_claim,
        cache_dir=None if cache_dir is None else str(cache_dir), jobs=jobs, last_step=last_step)
    if message:
        raise StepError(message, step, code)
    return Result(json.loads(raw), verified, raw)


def groebner(variables, polynomials):
    return _walgebra.groebner(list(variables), list(polynomials))


def dimension(variables, polynomials):
    return _walgebra.dimension(list(variables), list(polynomials))


def render_text(report):
    if isinstance(report, Result):
        report = report.report_json
    elif isinstance(report, dict):
        report = json.dumps(report)
    return _walgebra.render_text(report)
