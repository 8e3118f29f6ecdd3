"""Python interface to the edbound library.

Bound functions take an instance document (JSON text or a dict with keys
degree, group, subgroup_H and optionally normal_N) and return the report
document as a dict.
"""

import json

from . import _core
from ._core import EdboundError, Group, RANK_NOTE, compose, parse_cycles, pgl_bound

__all__ = [
    "EdboundError",
    "Group",
    "RANK_NOTE",
    "compare_bounds",
    "compose",
    "csa_bound",
    "normalize_report",
    "optimal_thm_h_bound",
    "parse_cycles",
    "pgl_bound",
    "run_suite",
    "section5_bound",
    "stabilizer_index",
    "thm_h_bound",
]


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def thm_h_bound(instance, gens=None, cap=20000):
    return json.loads(_core.thm_h_bound(_text(instance), gens, cap))


def optimal_thm_h_bound(instance, max_s, cap=20000):
    return json.loads(_core.optimal_thm_h_bound(_text(instance), max_s, cap))


def csa_bound(instance, cap=20000):
    return _core.csa_bound(_text(instance), cap)


def section5_bound(instance, cap=20000):
    return json.loads(_core.section5_bound(_text(instance), cap))


def stabilizer_index(instance, g):
    """Returns ([G : H cap H^g], |H H^g|, identity check)."""
    return _core.stabilizer_index(_text(instance), g)


def normalize_report(report):
    text = report if isinstance(report, str) else json.dumps(report)
    return json.loads(_core.normalize_report(text))


def compare_bounds(p, s):
    return json.loads(_core.compare_bounds(p, s))


def run_suite(name, max_order=24):
    return _core.run_suite(name, max_order)
