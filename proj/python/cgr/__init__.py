"""Exact arithmetic and center computation for crystalline graded rings.

The heavy lifting lives in the compiled extension; this package re-exports it
and adds a couple of convenience helpers that speak plain dicts.
"""

import json as _json

from ._core import (
    Algebra,
    MethodUnavailable,
    catalog,
    catalog_load,
    catalog_spec,
    load_spec,
    validate_spec,
)

__all__ = [
    "Algebra",
    "MethodUnavailable",
    "catalog",
    "catalog_load",
    "catalog_spec",
    "load_spec",
    "validate_spec",
    "center_report",
]


def center_report(algebra, method="both"):
    """Center report as a dict (parsed from the canonical JSON form)."""
    return _json.loads(algebra.center_report_json(method))
