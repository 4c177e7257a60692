import os
from typing import Dict, Any

BUDGET_LOG2 = int(os.getenv("OCCAM_BUDGET_LOG2", "22"))

SEARCH_CONFIGS: Dict[str, Dict[str, Any]] = {
    "poset": {
        "budget": 1 << BUDGET_LOG2,  # subsets visited per sweep
    },
    "occ": {
        "arithmetic_bits": 63,
        "full_space_witness_cap": 4096,
    },
    "groups": {
        "order_cap": int(os.getenv("OCCAM_GROUP_ORDER_CAP", "64")),
        "exhaustive_verify_order": 64,
        "associativity_samples": 20000,
        "max_symmetric_degree": 5,
    },
    "fusion": {
        "fixpoint_threshold": 10,  # |s| above which group_fusion_set uses the fixpoint path
        "terms": 3,
    },
    "cli": {
        "budget_log2": BUDGET_LOG2,
        "log_dir": os.getenv("OCCAM_LOG_DIR", "logs"),
        "threads": 1,
        "format": "text",
    },
}
