"""Graded polynomial identities of the pair (M_n(K), gl_n(K)).

Every function takes DSL text (see the README) and returns plain Python data
decoded from the JSON the command-line tool prints.
"""

import json as _json

from . import _gpi
from ._gpi import GpiError

__all__ = [
    "GpiError",
    "canonical",
    "check",
    "congruent",
    "enum_reduced",
    "evaluate",
    "express",
    "verify",
    "z3reduce",
]


def check(text):
    """Return {"identity": bool, "witness": ...}."""
    return _json.loads(_gpi.check(text))


def evaluate(text, word=None):
    return _json.loads(_gpi.evaluate(text, word))


def congruent(text, m=None, n=None):
    """Chain certificate for m = n mod J, or None if the words are not congruent."""
    out = _gpi.congruent(text, m, n)
    return None if out is None else _json.loads(out)


def express(text):
    """J-combination certificate, or None if the polynomial is not an identity."""
    out = _gpi.express(text)
    return None if out is None else _json.loads(out)


def z3reduce(text, fresh_start=None):
    return _json.loads(_gpi.z3reduce(text, fresh_start))


def enum_reduced(max_len=3, max_vars=0):
    return _gpi.enum_reduced(max_len, max_vars)


def verify(certificate):
    """Replay a certificate given as a dict or JSON text; returns (ok, diagnostic)."""
    if not isinstance(certificate, str):
        certificate = _json.dumps(certificate)
    return _gpi.verify(certificate)


def canonical(text):
    """Reformat DSL text into its canonical form."""
    return _gpi.canonical(text)
