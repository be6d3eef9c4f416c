"""Finite groups, skew braces and the verification suites."""

import json

from brace_forge import _core
from brace_forge._core import (
    Brace,
    CapExceeded,
    Error,
    Group,
    InvalidArgument,
    LawViolation,
    a_triv,
    are_isomorphic,
    brace_from_factorization,
    catalog_names,
    diagonal_brace,
    diophantine_scan,
    e_of_n,
    is_prime,
    legendre,
    parse_group,
    suite_names,
    triv,
)


def vp(m, p):
    """p-adic valuation of m; None for m = 0."""
    return _core.vp(str(m), p)


def build_brace(construction):
    return _core.build_brace(json.dumps(construction))


def run_suite(name, parallel=1):
    return json.loads(_core.run_suite(name, parallel))


__all__ = [
    "Brace", "CapExceeded", "Error", "Group", "InvalidArgument", "LawViolation",
    "a_triv", "are_isomorphic", "brace_from_factorization",
    "build_brace", "catalog_names", "diagonal_brace",
    "diophantine_scan", "e_of_n", "is_prime", "legendre", "parse_group",
    "run_suite", "suite_names", "triv", "vp",
]
