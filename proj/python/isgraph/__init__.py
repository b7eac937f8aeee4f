"""Intersection graphs of finite permutation groups."""

import json
import os

from ._core import (
    BudgetExceeded,
    DegreeMismatch,
    InvalidArgument,
    ParseError,
    Permutation,
    diam2_criterion,
    order_product_forces_intersection,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "DegreeMismatch",
    "InvalidArgument",
    "ParseError",
    "Permutation",
    "admissibility",
    "analyze",
    "catalog_order",
    "certify",
    "diam2_criterion",
    "group_order",
    "order_product_forces_intersection",
    "normalizer_pair",
]


def _tokens(spec):
    return spec.split() if isinstance(spec, str) else list(spec)


def group_order(degree, generators):
    return int(_core._group_order(degree, list(generators)))


def catalog_order(spec):
    return int(_core._catalog_order(_tokens(spec)))


def analyze(spec, threads=1):
    """Vertex, edge and component counts and the diameter (None if disconnected)."""
    result = json.loads(_core._analyze(_tokens(spec), threads))
    result["order"] = int(result["order"])
    return result


def certify(path, threads=1):
    return json.loads(_core._certify(os.fspath(path), threads))


def normalizer_pair(n):
    return json.loads(_core._theorem2_pair(n))


def admissibility(n):
    return json.loads(_core._admissibility(n))
