"""Vectorised sweeps over every subset of a family's domain.

A sweep takes the canonical-order subset array from `sweep_order` and
evaluates, for all subsets at once, which members are Occam on them (a member
is Occam on S iff S meets each of its blockers).
"""
import logging
from typing import List, Sequence
import numpy as np

from src.poset.functions import FunctionFamily

logger = logging.getLogger(__name__)


def occam_vector(blockers: Sequence[int], subsets: np.ndarray) -> np.ndarray:
    """Boolean vector: entry k is true iff subsets[k] meets every blocker."""
    hit = np.ones(len(subsets), dtype=bool)
    for blocker in blockers:
        hit &= (subsets & subsets.dtype.type(blocker)) != 0
    return hit


def fusion_sizes(family: FunctionFamily, subsets: np.ndarray) -> np.ndarray:
    """|F_S| for every S in `subsets`."""
    sizes = np.zeros(len(subsets), dtype=np.int64)
    for g in range(len(family)):
        sizes += occam_vector(family.blockers(g), subsets)
    return sizes


def sweep_fusion_number(family: FunctionFamily, index: int, subsets: np.ndarray) -> int:
    """min |F_S| over the subsets S on which member `index` is Occam."""
    candidates = subsets[occam_vector(family.blockers(index), subsets)]
    return int(fusion_sizes(family, candidates).min())


def sweep_fusion_masks(family: FunctionFamily, subsets: np.ndarray) -> List[int]:
    """
    Distinct fusion sets over the sweep, as member masks, in first-encounter order.

    Rows are packed eight members to a byte (little bit order) so deduplication
    works on fixed-width byte strings whatever the family size.
    """
    width = (len(family) + 7) // 8
    packed = np.zeros((len(subsets), width), dtype=np.uint8)
    for g in range(len(family)):
        occam = occam_vector(family.blockers(g), subsets).astype(np.uint8)
        packed[:, g >> 3] |= occam << np.uint8(g & 7)
    rows = np.ascontiguousarray(packed).view(np.dtype((np.void, width))).ravel()
    _, first = np.unique(rows, return_index=True)
    first.sort()
    logger.debug(f"Sweep of {len(subsets)} subsets gave {len(first)} distinct fusion sets")
    return [int.from_bytes(packed[i].tobytes(), "little") for i in first]
