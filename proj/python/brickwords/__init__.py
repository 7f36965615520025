"""Simultaneous brick codings of two substitution fixed points.

Most functions take a run config in the text form accepted by the
``brickwords`` command line tool, e.g.::

    a->abc;b->a;c->ac | a->cba;b->a;c->ca seeds=a,c
"""

import json

from . import _core
from ._core import (
    BrickwordsError,
    OffsetBoundExceeded,
    ParseError,
    SCHEMA_VERSION,
    apply_morphism,
    fixed_point_prefix,
    incidence_matrix,
    normalize_config,
    render,
)

__all__ = [
    "BrickwordsError",
    "OffsetBoundExceeded",
    "ParseError",
    "SCHEMA_VERSION",
    "apply_morphism",
    "balance",
    "certify",
    "code",
    "fixed_point_prefix",
    "incidence_matrix",
    "infer",
    "normalize_config",
    "pipeline",
    "render",
    "scan",
]


def balance(config):
    return json.loads(_core.balance(config))


def code(config, with_word=False):
    return json.loads(_core.code(config, with_word))


def infer(config):
    return json.loads(_core.infer(config))


def certify(config, letter, back=1, fwd=1, row=1):
    return json.loads(_core.certify(config, letter, back, fwd, row))


def scan(config, letter, n, row=1):
    return json.loads(_core.scan(config, letter, n, row))


def pipeline(config):
    """Returns (report, exit_code)."""
    report, rc = _core.pipeline(config)
    return json.loads(report), rc
