"""Lie point symmetries of (1+2) linear evolution equations.

Each command mirrors the ``liesym`` CLI subcommand of the same name and
returns a :class:`Result` whose ``data`` is the JSON report as a dict.
Usage errors raise ``ValueError`` (``ParseError`` is a subclass). Nonzero
residuals and unclassified algebras come back with ``exit_code == 1``;
a generator that does not reduce the equation raises ``RuntimeError``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from . import _liesym
from ._liesym import ParseError, canonical, equation

__all__ = ["Result", "ParseError", "canonical", "equation", "verify", "find", "reduce", "classify", "report"]


@dataclass(frozen=True)
class Result:
    data: dict
    text: str
    exit_code: int

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def _run(command: str, **kw) -> Result:
    raw, text, code = _liesym.run(command, **kw)
    return Result(json.loads(raw), text, code)


def verify(equation: str = "hpz", generators: Sequence[str] = (), fixture: str = "", params: str = "") -> Result:
    return _run("verify", equation=equation, generators=list(generators), fixture=fixture, params=params)


def find(equation: str = "hpz", params: str = "", degree_cap: Optional[int] = None) -> Result:
    return _run("find", equation=equation, params=params, degree_cap=degree_cap)


def reduce(generator: str, equation: str = "hpz", params: str = "") -> Result:
    return _run("reduce", equation=equation, generators=[generator], params=params)


def classify(equation: str = "hpz", basis: str = "", fixture: str = "", params: str = "") -> Result:
    return _run("classify", equation=equation, basis=basis, fixture=fixture, params=params)


def report(params: str = "", degree_cap: Optional[int] = None) -> Result:
    return _run("report", params=params, degree_cap=degree_cap)
