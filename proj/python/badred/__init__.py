"""Cusp reduction checks on modular curves and 2-descent on quadratic twists."""

import json

from ._core import (
    DomainError,
    cor32_classify,
    count_points,
    kronecker,
    registry_labels,
    run_cli,
    split_check,
    stronger_holds,
    sum_of_two_squares,
    weaker_holds,
)
from . import _core


def table1(max_prime=13, jobs=1):
    return json.loads(_core.table1_json(max_prime, jobs))


def selmer(q, audit_places=False):
    return json.loads(_core.selmer_json(q, audit_places))


def x113(max_prime=11):
    return json.loads(_core.x113_json(max_prime))


def intro_demo():
    return json.loads(_core.intro_demo_json())


__all__ = [
    "DomainError",
    "cor32_classify",
    "count_points",
    "intro_demo",
    "kronecker",
    "registry_labels",
    "run_cli",
    "selmer",
    "split_check",
    "stronger_holds",
    "sum_of_two_squares",
    "table1",
    "weaker_holds",
    "x113",
]
