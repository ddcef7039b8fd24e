"""Two-term silting complexes and silted algebras over Dynkin quivers."""

import json
import os

from ._silted import AssertionFailure, NotDynkin, ParseError, fixture_names, run_suite

from . import _silted

__all__ = [
    "AssertionFailure",
    "NotDynkin",
    "ParseError",
    "ar_quiver",
    "classify",
    "dynkin_type",
    "fixture_names",
    "run_suite",
    "silting",
]


def _text(quiver):
    """Accepts quiver text, a file path or a bundled fixture name."""
    if quiver in fixture_names():
        return _silted.fixture_text(quiver)
    if os.path.exists(quiver):
        with open(quiver, encoding="utf-8") as f:
            return f.read()
    return quiver


def dynkin_type(quiver):
    return _silted.dynkin_type(_text(quiver))


def silting(quiver, tilting_only=False):
    return json.loads(_silted.silting_json(_text(quiver), tilting_only))


def classify(quiver, jobs=1):
    return json.loads(_silted.classify_json(_text(quiver), jobs))


def ar_quiver(quiver, two_term=False):
    return json.loads(_silted.ar_json(_text(quiver), two_term))
