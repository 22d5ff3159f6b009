"""Edge-to-edge sphere tilings by congruent a3b-quadrilaterals with rational angles."""

from .quad import Quad, make_quad, parse_quad_id, quad_id
from .classifier import classify_all
from .search import search_all_tilings
from .tiling import Tiling, apply_flip_schedule, build_earth_map, canonical_key, validate
from .geometry import realize, verify_appendix

__all__ = [
    "Quad",
    "Tiling",
    "apply_flip_schedule",
    "build_earth_map",
    "canonical_key",
    "classify_all",
    "make_quad",
    "parse_quad_id",
    "quad_id",
    "realize",
    "search_all_tilings",
    "validate",
    "verify_appendix",
]
