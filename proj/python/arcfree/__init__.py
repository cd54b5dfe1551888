"""Python access to the arcfree engine.

Fields are passed as text, e.g. ``":beta_1 gamma_1:"``; reports come back as dicts.
"""

import json

from . import _arcfree
from ._arcfree import ParseError, ResourceLimit, central_charge, coset_dims, jet_invariant_dims, run_cli

__version__ = _arcfree.version()


def ope(a, b, n_bg=None, n_bc=None):
    return json.loads(_arcfree.ope_json(a, b, n_bg, n_bc))


def realization(family, n, m, r):
    return json.loads(_arcfree.realization_json(family, n, m, r))


def certify(n, m, r, max_weight, with_jet=False, drop_relation=None, threads=1):
    return json.loads(_arcfree.certify_json(n, m, r, max_weight, with_jet, drop_relation, threads))


__all__ = [
    "ParseError",
    "ResourceLimit",
    "central_charge",
    "certify",
    "coset_dims",
    "jet_invariant_dims",
    "ope",
    "realization",
    "run_cli",
]
