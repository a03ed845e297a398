# 多面锥模块
from .cone import (
    Cone,
    Facet,
    cone_from_inequalities,
    cone_from_rays,
    intersect_all,
    is_interior_facet,
    orthant_face,
)
from .dd import canonicalize_h, canonicalize_v, dd_h_to_v

__all__ = [
    "Cone",
    "Facet",
    "cone_from_inequalities",
    "cone_from_rays",
    "intersect_all",
    "is_interior_facet",
    "orthant_face",
    "canonicalize_h",
    "canonicalize_v",
    "dd_h_to_v",
]
