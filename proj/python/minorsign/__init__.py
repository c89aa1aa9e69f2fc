"""Exact principal-minor sign classes and real-eigenvalue counts.

Thin wrapper over the C++ extension: matrices go in as sequences of rows
whose entries are ints, floats (converted exactly as binary dyadics), or
strings like "-2", "3/4", "0.25"; reports come back as plain dicts with
every rational rendered as a canonical "p/q" string.
"""

import json as _json

from ._minorsign import (  # noqa: F401
    DEFAULT_CAP,
    CapacityError,
    char_poly,
    class_names,
    classify_json,
    hunt_json,
    minor_sums,
    root_counts,
    table_text,
    verify_json,
)

__all__ = [
    "DEFAULT_CAP",
    "CapacityError",
    "char_poly",
    "class_names",
    "classify",
    "hunt",
    "minor_sums",
    "root_counts",
    "table_text",
    "verify",
]

__version__ = "0.1.0"


def classify(rows, cap=DEFAULT_CAP):
    """Class memberships, principal minors, and minor sums, as a dict."""
    return _json.loads(classify_json(rows, cap))


def verify(rows, cap=DEFAULT_CAP):
    """Full consistency report: classes, char poly, root counts, predictions."""
    return _json.loads(verify_json(rows, cap))


def hunt(class_name, n, count=1, seed=0, symmetric=False, max_trials=0, cap=DEFAULT_CAP):
    """Verified witness matrices of a class; dict with witnesses/trials_used/exhausted."""
    return _json.loads(hunt_json(class_name, n, count, seed, symmetric, max_trials, cap))
