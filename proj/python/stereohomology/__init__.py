"""Stereohomologies of projective 3-space: construct, classify, compose, rotate
and solve Desargues configurations.

Scalars on the rational backend are :class:`fractions.Fraction`; on the float
backend they are ``float``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import _core
from ._core import (
    GeometryError,
    check_rotation_eigenstructure,
    homology,
    involutory,
    perspective,
    reflection_pair_axis,
    rotation_from_reflections,
    rotation_rodrigues,
    singular,
)

__all__ = [
    "GeometryError",
    "SchemaError",
    "apply",
    "check_rotation_eigenstructure",
    "classify",
    "compose",
    "construct",
    "desargues_solve",
    "desargues_verify",
    "homology",
    "involutory",
    "perspective",
    "reflection_pair_axis",
    "rotate",
    "rotation_from_reflections",
    "rotation_rodrigues",
    "run",
    "singular",
]


class SchemaError(ValueError):
    """The request document had the wrong shape."""


def _encode(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    return value


def _decode(value: Any) -> Any:
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ValueError:
            return value
    if isinstance(value, dict):
        return {k: v if k in _TEXT_FIELDS else _decode(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_decode(v) for v in value]
    return value


_TEXT_FIELDS = {"kind", "sub", "family", "mu_convention", "detail", "backend", "relation", "status", "violated", "error"}


def run(subcommand: str, document: dict, backend: str | None = None) -> dict:
    """Run one request and return the decoded result.

    Raises :class:`SchemaError` or :class:`GeometryError` on failure.
    """
    code, text = _core.run(subcommand, json.dumps(_encode(document)), backend)
    out = json.loads(text)
    if code == 2:
        raise SchemaError(out["detail"])
    if code == 3:
        raise GeometryError(out["error"], out["detail"])
    return _decode(out)


def construct(spec: dict, backend: str | None = None) -> list:
    return run("construct", spec, backend)["matrix"]


def classify(matrix: list, backend: str | None = None) -> dict:
    return run("classify", {"matrix": matrix}, backend)


def compose(left: Any, right: Any, backend: str | None = None) -> dict:
    return run("compose", {"left": left, "right": right}, backend)


def apply(matrix: Any, points: list = (), hyperplanes: list = (), backend: str | None = None) -> dict:
    return run("apply", {"matrix": matrix, "points": list(points), "hyperplanes": list(hyperplanes)}, backend)


def rotate(document: dict) -> dict:
    return run("rotate", document)


def desargues_verify(config: dict, backend: str | None = None) -> dict:
    return run("desargues-verify", config, backend)


def desargues_solve(config: dict, backend: str | None = None) -> dict:
    return run("desargues-solve", config, backend)
