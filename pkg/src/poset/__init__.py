from src.poset.functions import FiniteFunction, FunctionFamily
from src.poset.subsets import SubsetMask, canonical_subsets
from src.poset.operations import (
    AscendentResult,
    FusionStatus,
    FusionTerm,
    FusionValue,
    RadiusResult,
    ascendent,
    fusion_number,
    fusion_sequence,
    fusion_set,
    is_occam,
    least,
    maximum,
    radius,
    restriction_agrees,
)

__all__ = [
    "FiniteFunction",
    "FunctionFamily",
    "SubsetMask",
    "canonical_subsets",
    "AscendentResult",
    "FusionStatus",
    "FusionTerm",
    "FusionValue",
    "RadiusResult",
    "ascendent",
    "fusion_number",
    "fusion_sequence",
    "fusion_set",
    "is_occam",
    "least",
    "maximum",
    "radius",
    "restriction_agrees",
]
