from src.groups.group import FiniteGroup, SubgroupMask
from src.groups.constructors import (
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    make_group,
    quaternion,
    symmetric,
)
from src.groups.subgroups import (
    characteristic_family,
    closure,
    generating_set,
    minimal_subgroups,
    rank,
    subgroup_as_group,
    subgroups,
)
from src.groups.radius import (
    RadiusReport,
    check_monotonicity,
    check_rank_theorem,
    find_invariant_collisions,
    occ_by_hitting_set,
    occ_of_group,
    radius_report,
    rule_out_embedding,
    subgroup_radius,
)
from src.groups.fusion import (
    FusionReport,
    f0_via_rank,
    fusion_sequence_group,
    group_fusion_set,
    periodicity_probe,
)

__all__ = [
    "FiniteGroup",
    "SubgroupMask",
    "alternating",
    "cyclic",
    "dicyclic",
    "dihedral",
    "direct_product",
    "make_group",
    "quaternion",
    "symmetric",
    "characteristic_family",
    "closure",
    "generating_set",
    "minimal_subgroups",
    "rank",
    "subgroup_as_group",
    "subgroups",
    "RadiusReport",
    "check_monotonicity",
    "check_rank_theorem",
    "find_invariant_collisions",
    "occ_by_hitting_set",
    "occ_of_group",
    "radius_report",
    "rule_out_embedding",
    "subgroup_radius",
    "FusionReport",
    "f0_via_rank",
    "fusion_sequence_group",
    "group_fusion_set",
    "periodicity_probe",
]
