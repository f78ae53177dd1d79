"""Subspace packing toolkit.

Exact bounds, explicit constructions, exhaustive verification and
integer-programming export for packings of k-dimensional subspaces of
F_q^n, exposed as a library, a FastAPI service and a thin CLI client.
"""

__version__ = "0.1.0"

from .bounds import BoundEngine, BoundResult, KnownValues
from .constructions import (
    CoveringParams,
    PackingCode,
    build_covering,
    construction_1,
    construction_2,
    construction_3,
    dualize_covering,
    dualize_packing,
    linkage_lower,
    packing_from_dual,
    packing_lower,
)
from .gf import (
    Field,
    Matrix,
    Subspace,
    enumerate_subspaces,
    field,
    rref,
    span_dim,
    subspace_distance,
)
from .oracle import exhaustive_max, greedy_lower, verify_covering, verify_packing
from .params import PackingParams
from .qcalc import gaussian_binomial, q_int

__all__ = [
    "BoundEngine",
    "BoundResult",
    "CoveringParams",
    "Field",
    "KnownValues",
    "Matrix",
    "PackingCode",
    "PackingParams",
    "Subspace",
    "build_covering",
    "construction_1",
    "construction_2",
    "construction_3",
    "dualize_covering",
    "dualize_packing",
    "enumerate_subspaces",
    "exhaustive_max",
    "field",
    "gaussian_binomial",
    "greedy_lower",
    "linkage_lower",
    "packing_from_dual",
    "packing_lower",
    "q_int",
    "rref",
    "span_dim",
    "subspace_distance",
    "verify_covering",
    "verify_packing",
]
