"""Homological invariants of finitely presented FI_G-modules.

Presentations are dicts in the JSON file schema, JSON text, or a path to a
file. Reports come back as dicts; the string "-inf" stands for minus infinity.
"""

import json
import os

from . import _fihom
from ._fihom import ParseError, PropertyViolation, WindowError, property_names

__all__ = [
    "ParseError",
    "PropertyViolation",
    "WindowError",
    "check",
    "complex",
    "fuzz",
    "growth",
    "invariants",
    "property_names",
    "random_presentation",
]


def _text(presentation):
    if isinstance(presentation, dict):
        return json.dumps(presentation)
    if isinstance(presentation, os.PathLike) or (
        isinstance(presentation, str) and not presentation.lstrip().startswith("{")
    ):
        with open(presentation, encoding="utf-8") as f:
            return f.read()
    return presentation


def invariants(presentation, smax=3, window=0, allow_uncertified=False):
    return json.loads(_fihom.invariants(_text(presentation), smax, window, allow_uncertified))


def complex(presentation, max_window=20):
    return json.loads(_fihom.complex(_text(presentation), max_window))


def growth(presentation, max_window=20):
    return json.loads(_fihom.growth(_text(presentation), max_window))


def check(presentation, smax=3, checks=()):
    return json.loads(_fihom.check(_text(presentation), smax, list(checks)))


def random_presentation(seed, trial=0, **profile):
    return json.loads(_fihom.random_presentation(seed, trial, **profile))


def fuzz(seed=42, trials=50, checks=(), **profile):
    return json.loads(_fihom.fuzz(seed=seed, trials=trials, checks=list(checks), **profile))
