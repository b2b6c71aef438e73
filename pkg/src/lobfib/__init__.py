"""Löbell and Fibonacci closed orientable hyperbolic 3-manifolds as
combinatorial objects: polytopes, colorings, face pairings, singular
triangulations, closed-form volumes, and two-sided complexity bounds."""

from .bounds import (
    BoundsReport,
    bounds_report,
    fibonacci_tet_count,
    lobell_tet_count,
    lower_bound_from_volume,
)
from .coloring import (
    ALPHA,
    BETA,
    COLORS,
    DELTA,
    GAMMA,
    FaceColoring,
    GroupPresentation,
    Z2Vector3,
    canonical_coloring,
    enumerate_colorings,
    known_lobell6_coloring,
    presentation_F2,
    presentation_G,
    validate_coloring,
)
from .gluing import (
    EdgeCycle,
    FaceMatch,
    FacePairing,
    GluedComplex,
    ManifoldReport,
    StructureError,
    VertexLinkReport,
    assemble_fibonacci,
    assemble_lobell,
    edge_cycles,
    fibonacci_pairing,
    verify_closed_manifold,
)
from .polytope import (
    FIBONACCI,
    LOBELL,
    CombinatorialPolytope,
    boundary_orientation,
    build_fibonacci_polytope,
    build_lobell_polytope,
    validate_polytope,
)
from .triangulation import (
    Triangulation,
    TriangulationFormatError,
    export_triangulation,
    import_triangulation,
    triangulate_fibonacci,
    triangulate_lobell,
    verify_triangulation,
)
from .volume import (
    VolumeResult,
    fibonacci_parameters,
    fibonacci_volume,
    lobachevsky,
    lobachevsky_with_error,
    lobell_volume,
    theta,
    v3,
)

__all__ = [
    "ALPHA",
    "BETA",
    "COLORS",
    "DELTA",
    "GAMMA",
    "FIBONACCI",
    "LOBELL",
    "BoundsReport",
    "CombinatorialPolytope",
    "EdgeCycle",
    "FaceColoring",
    "FaceMatch",
    "FacePairing",
    "GluedComplex",
    "GroupPresentation",
    "ManifoldReport",
    "StructureError",
    "Triangulation",
    "TriangulationFormatError",
    "VertexLinkReport",
    "VolumeResult",
    "Z2Vector3",
    "assemble_fibonacci",
    "assemble_lobell",
    "boundary_orientation",
    "bounds_report",
    "build_fibonacci_polytope",
    "build_lobell_polytope",
    "canonical_coloring",
    "edge_cycles",
    "enumerate_colorings",
    "export_triangulation",
    "fibonacci_pairing",
    "fibonacci_parameters",
    "fibonacci_tet_count",
    "fibonacci_volume",
    "import_triangulation",
    "known_lobell6_coloring",
    "lobachevsky",
    "lobachevsky_with_error",
    "lobell_tet_count",
    "lobell_volume",
    "lower_bound_from_volume",
    "presentation_F2",
    "presentation_G",
    "theta",
    "triangulate_fibonacci",
    "triangulate_lobell",
    "v3",
    "validate_coloring",
    "validate_polytope",
    "verify_closed_manifold",
    "verify_triangulation",
]

__version__ = "0.1.0"
