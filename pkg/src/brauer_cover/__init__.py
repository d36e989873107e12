"""Group-weighted Galois coverings of Brauer graph algebras via smash products."""

from .brauer import (
    Arrow,
    BoundQuiver,
    BrauerGraph,
    BrauerPermutation,
    Classification,
    Violation,
    canonical_relation,
    validate,
)
from .deletions import (
    DeletionPlan,
    delete_cycles,
    delete_loops,
    delete_multiple_edges,
    delete_multiple_edges_tree,
    delete_multiplicity,
)
from .errors import BrauerCoverError
from .groups import INF, GroupSpec
from .iso import graph_iso, ribbon_iso
from .smash import (
    BrauerCovering,
    CoveringQuiver,
    CoveringReport,
    admissibility_via_orbits,
    check_covering,
    cross_validate_theorem,
    smash_brauer,
    smash_quiver,
    windowed_bound_quiver,
)
from .weights import (
    GWeight,
    is_admissible,
    is_homogeneous_brauer,
    is_homogeneous_quiver,
    path_weight,
)

__version__ = "0.1.0"

__all__ = [
    "Arrow",
    "BoundQuiver",
    "BrauerCoverError",
    "BrauerCovering",
    "BrauerGraph",
    "BrauerPermutation",
    "Classification",
    "CoveringQuiver",
    "CoveringReport",
    "DeletionPlan",
    "GWeight",
    "GroupSpec",
    "INF",
    "Violation",
    "admissibility_via_orbits",
    "canonical_relation",
    "check_covering",
    "cross_validate_theorem",
    "delete_cycles",
    "delete_loops",
    "delete_multiple_edges",
    "delete_multiple_edges_tree",
    "delete_multiplicity",
    "graph_iso",
    "is_admissible",
    "is_homogeneous_brauer",
    "is_homogeneous_quiver",
    "path_weight",
    "ribbon_iso",
    "smash_brauer",
    "smash_quiver",
    "validate",
    "windowed_bound_quiver",
]
