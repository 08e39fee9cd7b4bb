"""Exact checks for weak distributive laws between hyperspace and valuation monads.

Posets, spaces and elements use the same JSON encoding as the command-line
tool; this wrapper takes and returns plain Python dicts and lists.
"""

import json

from . import _core
from ._core import FormatError, LambdaError, RepresentationError, SpaceError

__all__ = [
    "FormatError",
    "LambdaError",
    "RepresentationError",
    "SpaceError",
    "canonicalize",
    "check",
    "default_instances",
    "detect_mutation",
    "equal",
    "lambda_",
    "leq",
    "random_element",
    "retraction_r",
    "retraction_s",
    "show",
    "stochastic_leq",
    "suite_names",
    "witness",
]


def _dump(value):
    return json.dumps(value)


def suite_names():
    return list(_core.suite_names())


def default_instances(suite):
    return _core.default_instances(suite)


def check(suite, case="all", flavor="one", seed=1, instances=0, max_base_size=4, max_generators=3,
          max_depth=4, parallelism=1, mutation="none"):
    return json.loads(_core.check(suite, case, flavor, seed, instances, max_base_size, max_generators,
                                  max_depth, parallelism, mutation))


def lambda_(case, flavor, poset, xi):
    return json.loads(_core.lambda_(case, flavor, _dump(poset), _dump(xi)))


def witness(case="DN", flavor="one"):
    raw = _core.witness(case, flavor)
    return None if raw is None else json.loads(raw)


def detect_mutation(mutation, seed=1):
    return json.loads(_core.detect_mutation(mutation, seed))


def canonicalize(space, element):
    return json.loads(_core.canonicalize(_dump(space), _dump(element)))


def show(space, element):
    return _core.show(_dump(space), _dump(element))


def leq(space, a, b):
    return _core.leq(_dump(space), _dump(a), _dump(b))


def equal(space, a, b):
    return _core.equal(_dump(space), _dump(a), _dump(b))


def stochastic_leq(space, a, b, method="coupling"):
    return _core.stochastic_leq(_dump(space), _dump(a), _dump(b), method)


def random_element(space, seed, size_budget=3):
    return json.loads(_core.random_element(_dump(space), seed, size_budget))


def retraction_r(case, flavor, poset, q):
    return json.loads(_core.retraction_r(case, flavor, _dump(poset), _dump(q)))


def retraction_s(case, flavor, poset, f):
    return json.loads(_core.retraction_s(case, flavor, _dump(poset), _dump(f)))
