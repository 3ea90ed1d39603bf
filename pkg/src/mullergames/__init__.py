"""Solve Müller-type regular games by partitioning subgames into full wins."""

from .arena import (
    Arena,
    attractor,
    bits,
    full_mask,
    is_subarena,
    is_trap,
    mask_of,
    submask_iteration,
    validate,
)
from .conditions import (
    ColouredMuller,
    KLCondition,
    McNaughton,
    Muller,
    Rabin,
    Streett,
    classify_large,
    complement_muller,
    lambert_w,
    muller_from_sets,
    player0_accepts,
)
from .family import SubsetFamily
from .oracle import oracle_solve
from .reductions import kl_to_muller, materialize_omega, rabin_to_kl, solve_streett_via_duality
from .solver import (
    PartitionTables,
    SolveResult,
    partition_alg1,
    partition_alg2,
    solve,
    winning_regions,
)

__version__ = "0.1.0"

__all__ = [
    "Arena",
    "ColouredMuller",
    "KLCondition",
    "McNaughton",
    "Muller",
    "PartitionTables",
    "Rabin",
    "SolveResult",
    "Streett",
    "SubsetFamily",
    "attractor",
    "bits",
    "classify_large",
    "complement_muller",
    "full_mask",
    "is_subarena",
    "is_trap",
    "kl_to_muller",
    "lambert_w",
    "mask_of",
    "materialize_omega",
    "muller_from_sets",
    "oracle_solve",
    "partition_alg1",
    "partition_alg2",
    "player0_accepts",
    "rabin_to_kl",
    "solve",
    "solve_streett_via_duality",
    "submask_iteration",
    "validate",
    "winning_regions",
]
