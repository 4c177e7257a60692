from typing import Dict, List, Optional, Tuple

# Ordered by group order; specs follow the make_group grammar.
CATALOG: List[str] = [
    "Z1",
    "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3", "Z7",
    "Z8", "Q8", "Z2xZ4", "D4", "Z9", "Z3xZ3", "Z10",
    "Dic3", "Z2xZ6", "A4", "D6", "Z12", "Z14", "Z16",
]

# (order, rank, Occ) as originally published. The Z6 cell (1) disagrees with
# the definition, which gives 2; the census flags it.
PUBLISHED_OCC: Dict[str, Tuple[int, int, int]] = {
    "Z2": (2, 1, 1),
    "Z3": (3, 1, 1),
    "Z4": (4, 1, 1),
    "Z2xZ2": (4, 2, 3),
    "Z5": (5, 1, 1),
    "Z6": (6, 1, 1),
    "S3": (6, 2, 4),
    "Z7": (7, 1, 1),
    "Z8": (8, 1, 1),
    "Q8": (8, 2, 1),
    "Z2xZ4": (8, 2, 3),
    "D4": (8, 2, 5),
    "Dic3": (12, 2, 2),
    "Z2xZ6": (12, 2, 4),
    "A4": (12, 2, 7),
    "D6": (12, 2, 8),
}

# F0..F3 as originally published; None marks an unpublished ("?") cell.
PUBLISHED_FUSION: Dict[str, Tuple[Optional[int], ...]] = {
    "Z2": (2, 2, 2, 2),
    "Z3": (2, 2, 2, 2),
    "Z5": (2, 2, 2, 2),
    "Z7": (2, 2, 2, 2),
    "Z4": (2, 4, 2, 4),
    "Z2xZ2": (4, 8, 2, None),
    "Z6": (2, 4, 4, 8),
    "S3": (4, 16, 2, None),
    "Z8": (2, 8, 2, 8),
    "D4": (4, 64, None, None),
    "Q8": (4, 16, 2, None),
    "Z9": (2, 4, 2, 4),
    "Z3xZ3": (4, 16, 2, None),
    "Z10": (2, 4, 4, 8),
    "Z12": (2, 8, 4, None),
    "Z14": (2, 4, 4, 8),
    "Z16": (2, 16, 2, None),
}
