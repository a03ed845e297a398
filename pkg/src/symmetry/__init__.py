# 对称群模块
from .group import (
    SymmetryGroup,
    act_on_cone,
    act_on_ideal,
    face_of,
    group_closure,
    induced_matrix,
    iter_subset_orbit_representatives,
    mask_of,
    orbit_of_cone,
    subset_orbit_representatives,
    verify_ideal_invariance,
)
from .permutation import SignedPermutation, parse_cycles

__all__ = [
    "SymmetryGroup",
    "act_on_cone",
    "act_on_ideal",
    "face_of",
    "group_closure",
    "induced_matrix",
    "iter_subset_orbit_representatives",
    "mask_of",
    "orbit_of_cone",
    "subset_orbit_representatives",
    "verify_ideal_invariance",
    "SignedPermutation",
    "parse_cycles",
]
