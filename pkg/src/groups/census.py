import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence
import pandas as pd

from src.config.catalog import CATALOG, PUBLISHED_OCC
from src.config.search_configs import SEARCH_CONFIGS
from src.exceptions import InvalidArgumentError
from src.groups.constructors import make_group
from src.groups.fusion import fusion_sequence_group
from src.groups.radius import occ_by_hitting_set, occ_of_group
from src.groups.subgroups import rank


"""Sweeps the group catalog for order, rank, Occ and the first fusion numbers.

Usage: Import census; the CLI exposes it as the census command
"""


logger = logging.getLogger(__name__)


def census_row(spec: str, terms: int, budget: Optional[int] = None) -> Dict[str, object]:
    g = make_group(spec)
    occ = occ_of_group(g)
    hitting, _ = occ_by_hitting_set(g)
    published = PUBLISHED_OCC.get(spec)
    row: Dict[str, object] = {
        "group": spec,
        "order": g.order,
        "rank": rank(g),
        "occ": occ,
        "occ_hitting": hitting,
        "published_occ": published[2] if published else None,
        "occ_discrepancy": bool(published and published[2] != occ),
    }
    if row["occ_discrepancy"]:
        logger.warning(f"{spec}: Occ = {occ} by definition, published {published[2]}")
    if published and (published[0], published[1]) != (g.order, row["rank"]):
        logger.error(f"{spec}: order/rank {g.order}/{row['rank']} differ from published {published[:2]}")
    report = fusion_sequence_group(g, terms, budget)
    for t in report.terms:
        row[f"F{t.index}"] = t.value
        row[f"F{t.index}_status"] = t.status.value
    logger.info(f"Census row for {spec} done")
    return row


def census_specs(max_order: int, specs: Sequence[str] = tuple(CATALOG)) -> List[str]:
    """
    Catalog groups of order at most max_order.

    The trivial group only appears on its own, for max_order = 1; the published
    tables start at order 2.
    """
    chosen = []
    for spec in specs:
        order = make_group(spec).order
        if order <= max_order and (order > 1 or max_order == 1):
            chosen.append(spec)
    return chosen


def census(
    max_order: int,
    budget: Optional[int] = None,
    terms: int = 3,
    threads: int = 1,
    specs: Sequence[str] = tuple(CATALOG),
) -> pd.DataFrame:
    cap = SEARCH_CONFIGS["groups"]["order_cap"]
    if not 1 <= max_order <= cap:
        raise InvalidArgumentError(f"max_order must be between 1 and {cap}, got {max_order}")
    chosen = census_specs(max_order, specs)
    logger.info(f"Census over {len(chosen)} groups up to order {max_order}")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        rows = list(pool.map(lambda spec: census_row(spec, terms, budget), chosen))
    frame = pd.DataFrame(rows)
    for column in ["published_occ"] + [f"F{i}" for i in range(terms + 1)]:
        frame[column] = pd.array(frame[column].tolist(), dtype="Int64")
    return frame
