"""Python bindings for the orlicz-kit norm toolkit.

Functions, spaces and maps use the same JSON grammar as the command line
tool and may be passed as dicts or JSON strings.
"""

import json
from dataclasses import dataclass

from . import _core
from ._core import (
    ArgumentError,
    ConfigError,
    DegenerateInputError,
    DomainError,
    EvaluationError,
    PreconditionError,
    YoungFunction,
    indicator_lorentz_closed_form,
    indicator_luxemburg_closed_form,
    nabla2_holds,
)

__version__ = _core.__version__

__all__ = [
    "ArgumentError",
    "ConfigError",
    "DegenerateInputError",
    "DomainError",
    "EvaluationError",
    "PreconditionError",
    "RunResult",
    "YoungFunction",
    "certify_blocks",
    "indicator_lorentz_closed_form",
    "indicator_luxemburg_closed_form",
    "lorentz_quasinorm",
    "luxemburg_norm",
    "nabla2_holds",
    "run",
    "young",
]


def _text(doc):
    if isinstance(doc, str):
        try:
            json.loads(doc)
            return doc
        except ValueError:
            pass
    return json.dumps(doc)


def _q(q):
    return float("inf") if q in ("inf", "+inf") else float(q)


def young(spec):
    """YoungFunction from a dict such as {"family": "power", "p": 2}."""
    return YoungFunction.from_json(_text(spec))


def luxemburg_norm(phi, f, space="lebesgue_line"):
    if not isinstance(phi, YoungFunction):
        phi = young(phi)
    return _core.luxemburg_norm(phi, _text(f), _text(space))


def lorentz_quasinorm(p, q, f, space="lebesgue_line"):
    return _core.lorentz_quasinorm(float(p), _q(q), _text(f), _text(space))


def certify_blocks(tau, phi, p, n_max=1000):
    if not isinstance(phi, YoungFunction):
        phi = young(phi)
    return _core.certify_blocks(_text(tau), phi, float(p), int(n_max))


@dataclass(frozen=True)
class RunResult:
    envelope: dict
    exit_code: int
    csv: str


def run(config):
    """Runs a full config document, as `orlicz-kit --config` would."""
    envelope, code, csv = _core.run(_text(config))
    return RunResult(json.loads(envelope), code, csv)
