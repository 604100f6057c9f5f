"""Seiberg-Witten curvature bounds, Einstein obstructions and minimal volumes for 4-manifolds."""

from .catalog import chen_surface, horikawa, hypersurface, k3
from .surface import FourManifold, KodairaDim, MinimalSurfaceSpec, Spin, blow_up, invariants_of, spin_status

__all__ = [
    "FourManifold",
    "KodairaDim",
    "MinimalSurfaceSpec",
    "Spin",
    "blow_up",
    "chen_surface",
    "horikawa",
    "hypersurface",
    "invariants_of",
    "k3",
    "spin_status",
]
__version__ = "0.1.0"
