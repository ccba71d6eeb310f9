from .chain import ChainComplex, boundary_from_faces
from .gpcomplex import GPComplex, build_gp_complex, gp_basis_size, homology_dims
from .p1 import ProjPoint, determinant, enumerate_p1, is_general_position, p1_size

__all__ = [
    "ChainComplex",
    "GPComplex",
    "ProjPoint",
    "boundary_from_faces",
    "build_gp_complex",
    "determinant",
    "enumerate_p1",
    "gp_basis_size",
    "homology_dims",
    "is_general_position",
    "p1_size",
]
