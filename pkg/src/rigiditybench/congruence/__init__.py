from .closure import (
    CLOSURE_GUARD,
    FiniteSubgroup,
    commutator_subgroup,
    normal_closure,
    relative_commutator,
    subgroup_closure,
    trivial_subgroup,
)
from .filtration import (
    AbelianizationReport,
    AcyclicityReport,
    CommutatorReport,
    LayerReport,
    LowerCentralReport,
    PthRootReport,
    SampleReport,
    abelianization_small,
    commutator_check,
    congruence_order,
    exponent_bound,
    is_klingenberg_exception,
    layer_acyclicity,
    layer_dimension,
    layer_iso_check,
    lower_central_series,
    pth_root_check,
    rho_additivity_check,
)
from .slgroup import (
    LiePartitionVector,
    SLElement,
    SpecialLinearGroup,
    bracket,
    commutator,
    congruence_generators,
    congruence_level,
    elementary_witness,
    layer_witnesses,
    partitions_of,
    rho,
)

__all__ = [
    "CLOSURE_GUARD",
    "AbelianizationReport",
    "AcyclicityReport",
    "CommutatorReport",
    "FiniteSubgroup",
    "LayerReport",
    "LiePartitionVector",
    "LowerCentralReport",
    "PthRootReport",
    "SLElement",
    "SampleReport",
    "SpecialLinearGroup",
    "abelianization_small",
    "bracket",
    "commutator",
    "commutator_check",
    "commutator_subgroup",
    "congruence_generators",
    "congruence_level",
    "congruence_order",
    "elementary_witness",
    "exponent_bound",
    "is_klingenberg_exception",
    "layer_acyclicity",
    "layer_dimension",
    "layer_iso_check",
    "layer_witnesses",
    "lower_central_series",
    "normal_closure",
    "partitions_of",
    "pth_root_check",
    "relative_commutator",
    "rho",
    "rho_additivity_check",
    "subgroup_closure",
    "trivial_subgroup",
]
