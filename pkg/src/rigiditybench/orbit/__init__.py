from .e1 import E1Page, compare_low_columns, e1_page
from .frame import (
    OrbitSimplex,
    ProjectiveMatrix,
    act,
    canonical_frame,
    frame_matrix,
    mobius,
    orbit_face,
)
from .orbitcomplex import (
    OrbitComplex,
    QuotientComplex,
    admissible_elements,
    build_orbit_complex,
    build_quotient_complex,
    orbit_basis_size,
)
from .stabilizer import (
    InvarianceReport,
    StabilizerReport,
    enumerate_pgl2,
    orbit_invariance_check,
    pgl2_order,
    stabilizer_orders,
)

__all__ = [
    "E1Page",
    "InvarianceReport",
    "OrbitComplex",
    "OrbitSimplex",
    "ProjectiveMatrix",
    "QuotientComplex",
    "StabilizerReport",
    "act",
    "admissible_elements",
    "build_orbit_complex",
    "build_quotient_complex",
    "canonical_frame",
    "compare_low_columns",
    "e1_page",
    "enumerate_pgl2",
    "frame_matrix",
    "mobius",
    "orbit_basis_size",
    "orbit_face",
    "orbit_invariance_check",
    "pgl2_order",
    "stabilizer_orders",
]
