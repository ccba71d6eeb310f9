from .bloch import (
    BlochComparison,
    BlochResult,
    FaceCrossCheck,
    SigmaTensorSquare,
    bloch_comparison_mod_p,
    compute_bloch,
    face_five_term_crosscheck,
    phi_matrix,
)
from .presentation import (
    PreBlochPresentation,
    build_presentation,
    enumerate_admissible,
    five_term_relation,
    is_admissible_pair,
)

__all__ = [
    "BlochComparison",
    "BlochResult",
    "FaceCrossCheck",
    "PreBlochPresentation",
    "SigmaTensorSquare",
    "bloch_comparison_mod_p",
    "build_presentation",
    "compute_bloch",
    "enumerate_admissible",
    "face_five_term_crosscheck",
    "five_term_relation",
    "is_admissible_pair",
    "phi_matrix",
]
