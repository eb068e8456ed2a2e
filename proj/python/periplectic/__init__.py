"""Kac modules, maximal vectors and composition factors for p(3) in characteristic p > 3.

Every function returns plain Python data decoded from the library's JSON reports.
Weights are pairs (r, s); coordinates may be ints or strings such as "t+1" for
characters whose weights live in an extension field.
"""

import json

from . import _core
from ._core import ResourceError

__all__ = ["lambda_list", "delta", "series", "maxvec", "kac_build", "verify", "typicality_scan", "ResourceError"]


def _coords(lam):
    return [str(x) for x in lam]


def lambda_list(p, chi, params=()):
    return json.loads(_core.lambda_list(p, chi, list(params)))


def delta(p, chi, lam, params=()):
    return json.loads(_core.delta(p, chi, _coords(lam), list(params)))


def series(p, chi, lam, seed=1, params=(), timing=True):
    return json.loads(_core.series(p, chi, _coords(lam), seed, list(params), timing))


def maxvec(p, chi, lam, params=()):
    return json.loads(_core.maxvec(p, chi, _coords(lam), list(params)))


def kac_build(p, chi, lam, params=()):
    return json.loads(_core.kac_build(p, chi, _coords(lam), list(params)))


def verify(p, kinds=(), jobs=1, seed=1):
    return json.loads(_core.verify(p, list(kinds), jobs, seed))


def typicality_scan(n, p):
    return json.loads(_core.typicality_scan(n, p))
