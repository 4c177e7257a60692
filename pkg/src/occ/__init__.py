from src.occ.bounds import (
    BoundWitness,
    OccInstance,
    brute_force_upper_bound,
    enumerate_bound_vectors,
    theorem_upper_bound,
)
from src.occ.constructions import (
    best_construction,
    construct_3n2,
    construct_m22,
    construct_mn1,
    full_function_space,
    single_function,
    verify_family_radius,
)
from src.occ.search import OccCertificate, exact_occ

__all__ = [
    "BoundWitness",
    "OccInstance",
    "brute_force_upper_bound",
    "enumerate_bound_vectors",
    "theorem_upper_bound",
    "best_construction",
    "construct_3n2",
    "construct_m22",
    "construct_mn1",
    "full_function_space",
    "single_function",
    "verify_family_radius",
    "OccCertificate",
    "exact_occ",
]
