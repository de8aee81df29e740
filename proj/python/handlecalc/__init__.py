"""Rewriting engine for 1-handle configurations labelled by braid words.

Word functions take a word in the text grammar ("e" or letters such as
"s1 s2^-1") and the braid index. Document functions take and return the
same JSON documents as the command line, as Python objects.
"""

import json as _json

from ._handlecalc import (
    BudgetExceeded,
    DegreeMismatch,
    Error,
    InvariantError,
    ParseError,
    PreconditionError,
    braid_equal,
    commutes,
    concat,
    free_reduce,
    invert,
    is_trivial,
    underlying_permutation,
    weak_bound,
)
from . import _handlecalc


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def validate(doc):
    return _json.loads(_handlecalc.validate_json(_text(doc)))


def stats(doc):
    return _json.loads(_handlecalc.stats_json(_text(doc)))


def bound(doc):
    return _json.loads(_handlecalc.bound_json(_text(doc)))


def plan(doc):
    return _json.loads(_handlecalc.plan_json(_text(doc)))


def simplify(doc, mode, epsilon=1, seed=0, max_steps=100000, fixed_disk=False, shifted=False):
    """Runs a normal-form strategy and returns the report, trace included."""
    return _json.loads(
        _handlecalc.simplify_json(_text(doc), mode, epsilon, seed, max_steps, fixed_disk, shifted)
    )


def verify(doc):
    """Replays a trace, or the trace inside a report."""
    return _json.loads(_handlecalc.verify_json(_text(doc)))


__all__ = [
    "BudgetExceeded", "DegreeMismatch", "Error", "InvariantError", "ParseError", "PreconditionError",
    "braid_equal", "commutes", "concat", "free_reduce", "invert", "is_trivial", "underlying_permutation",
    "weak_bound", "validate", "stats", "bound", "plan", "simplify", "verify",
]
