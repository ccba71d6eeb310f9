from .abelian import (
    PresentedAbelianGroup,
    abelian_cokernel,
    abelian_kernel,
    check_compatible,
    image_order,
    induced_map_mod_p,
    invariant_factors_from_elementary,
    invariant_factors_from_power_orders,
    tensor_mod_p,
    torsion_rank_mod_p,
)
from .base import BaseRankBackend
from .dense import DenseRankBackend, dense_rank
from .matrix import IntegerMatrix, PrimeFieldMatrix
from .snf import SmithForm, left_kernel, smith_normal_form, solve_left
from .sparse import SparseRankBackend, gf_rank

__all__ = [
    "BaseRankBackend",
    "DenseRankBackend",
    "IntegerMatrix",
    "PresentedAbelianGroup",
    "PrimeFieldMatrix",
    "SmithForm",
    "SparseRankBackend",
    "abelian_cokernel",
    "abelian_kernel",
    "check_compatible",
    "dense_rank",
    "gf_rank",
    "image_order",
    "induced_map_mod_p",
    "invariant_factors_from_elementary",
    "invariant_factors_from_power_orders",
    "left_kernel",
    "smith_normal_form",
    "solve_left",
    "tensor_mod_p",
    "torsion_rank_mod_p",
]
