"""Boundary-strata calculus for Mumford-type classes on the moduli of
1-pointed stable curves.

Thin wrapper over the compiled extension; the *_json entry points return
parsed dictionaries here for convenience.
"""

import json as _json

try:
    from ._mumford import (
        canonicalize_class_json,
        engine_version,
        expand_json,
        mumford_class_latex,
        mumford_class_text,
        relation_json,
        relation_latex,
        relation_text,
        verify_json,
    )
except ImportError:  # build-tree layout: extension next to the package
    from _mumford import (
        canonicalize_class_json,
        engine_version,
        expand_json,
        mumford_class_latex,
        mumford_class_text,
        relation_json,
        relation_latex,
        relation_text,
        verify_json,
    )

__version__ = engine_version()


def relation(genus):
    """The boundary formula for the degree-``genus`` Mumford-type class."""
    return _json.loads(relation_json(genus))


def expand(genus, max_steps=1000000):
    """Expansion report for the recursive simplification."""
    return _json.loads(expand_json(genus, max_steps))


def verify(suite="all", gmax=6, jmax=3):
    """Verification sweep; ``result["ok"]`` is the overall verdict."""
    return _json.loads(verify_json(suite, gmax, jmax))


__all__ = [
    "canonicalize_class_json",
    "engine_version",
    "expand",
    "expand_json",
    "mumford_class_latex",
    "mumford_class_text",
    "relation",
    "relation_json",
    "relation_latex",
    "relation_text",
    "verify",
    "verify_json",
    "__version__",
]
