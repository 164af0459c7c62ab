"""Exact arithmetic for the matrix groups, nilpotent orbits, characters, and
cocycles of the higher theta-lift construction.

The heavy lifting lives in the C++ extension ``_mtheta``; this package adds
small conveniences on top of it.
"""

import json as _json

from _mtheta import (
    borel_modulus_exponent,
    centralizer_dim_oracle,
    dimension_equation,
    dominance,
    dual_group,
    gk_dim,
    hilbert_tame,
    is_symplectic_partition,
    o_c,
    orbit_dim,
)
from _mtheta import verify as _verify_raw

__all__ = [
    "borel_modulus_exponent",
    "centralizer_dim_oracle",
    "dimension_equation",
    "dominance",
    "dual_group",
    "gk_dim",
    "hilbert_tame",
    "is_symplectic_partition",
    "o_c",
    "orbit_dim",
    "verify",
]


def verify(suite="all", p=7, seed=0, iters=50):
    """Run an invariant suite and return the report as a dict."""
    return _json.loads(_verify_raw(suite, p, seed, iters))
