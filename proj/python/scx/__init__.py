"""Python bindings for the scx S-complex and knot invariant library."""

import json as _json

from . import _scx
from ._scx import ParseError

__all__ = ["ParseError", "invariants", "cobordism", "validate", "froyshov", "tensor", "dual", "selftest"]


def _text(complex_data):
    return complex_data if isinstance(complex_data, str) else _json.dumps(complex_data)


def invariants(descriptor, ring="localT1", omega="1/4", filtered=False):
    """Invariant report for a knot descriptor such as ``twobridge:3/1``."""
    return _json.loads(_scx.invariants(descriptor, ring, str(omega), filtered))


def cobordism(data, omega="1/4"):
    """Minimal reducible report for cobordism data given as a dict."""
    return _json.loads(_scx.cobordism(_json.dumps(data), str(omega)))


def validate(complex_data):
    """List of violated axioms; empty for a valid complex."""
    return list(_scx.validate(_text(complex_data)))


def froyshov(complex_data):
    return _scx.froyshov(_text(complex_data))


def tensor(a, b):
    return _json.loads(_scx.tensor(_text(a), _text(b)))


def dual(complex_data):
    return _json.loads(_scx.dual(_text(complex_data)))


def selftest(suite="all", seed=7, cases=0):
    return _json.loads(_scx.selftest(suite, seed, cases))
