from .field import FieldDescriptor, default_modulus
from .ring import RingDescriptor, RingElement, ring_inv, ring_mul
from .units import (
    HenselCheck,
    UnitGroupData,
    UnitStructureReport,
    hensel_kernel_check,
    hensel_pth_root,
    roots_of_unity,
    unit_group,
    unit_group_invariants,
    unit_group_structure,
)

__all__ = [
    "FieldDescriptor",
    "HenselCheck",
    "RingDescriptor",
    "RingElement",
    "UnitGroupData",
    "UnitStructureReport",
    "default_modulus",
    "hensel_kernel_check",
    "hensel_pth_root",
    "ring_inv",
    "ring_mul",
    "roots_of_unity",
    "unit_group",
    "unit_group_invariants",
    "unit_group_structure",
]
