"""Quivers of Le-diagrams: three constructions and green-to-red sequences."""

from .construct import grid_to_le_script, quiver_from_le, quiver_via_script
from .gseed import Color, GSeed, Mode, initial_seed, verify_sequence
from .le import LeDiagram, Shape, enumerate_diagrams, parse_diagram
from .plabic import dual_quiver, faces, plabic_from_le, quiver_via_plabic
from .quiver import Quiver, grid_quiver, is_isomorphic
from .search import Outcome, SearchResult, find_sequence

__all__ = [
    "Color", "GSeed", "LeDiagram", "Mode", "Outcome", "Quiver", "SearchResult", "Shape",
    "dual_quiver", "enumerate_diagrams", "faces", "find_sequence", "grid_quiver",
    "grid_to_le_script", "initial_seed", "is_isomorphic", "parse_diagram",
    "plabic_from_le", "quiver_from_le", "quiver_via_plabic", "quiver_via_script",
    "verify_sequence",
]
