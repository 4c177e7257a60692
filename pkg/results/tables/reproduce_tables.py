import logging
from pathlib import Path
import pandas as pd

from src.config.catalog import CATALOG, PUBLISHED_FUSION
from src.groups import fusion_sequence_group, make_group, radius_report
from src.groups.census import census
from src.utils.report_writer import render_table


logger = logging.getLogger(__name__)

TABLES_DIR = Path('results/tables')


def subgroup_radius_table(spec="D4"):
    """
    Radius of every subgroup of one group, with its witness.

    Args:
        spec (str): Group expression

    Returns:
        pd.DataFrame: chi, radius, witness per subgroup
    """
    g = make_group(spec)
    return radius_report(g).to_frame(g.labels)


def occ_table(max_order=12):
    columns = ["group", "order", "rank", "occ", "published_occ", "occ_discrepancy"]
    return census(max_order, terms=1)[columns]


def fusion_table(terms=3, budget=None):
    rows = []
    for spec in CATALOG:
        if spec not in PUBLISHED_FUSION:
            continue
        report = fusion_sequence_group(make_group(spec), terms, budget)
        row = {"group": spec}
        for t in report.terms:
            row[f"F{t.index}"] = t.value
            row[f"F{t.index}_status"] = t.status.value
        rows.append(row)
        logger.info(f"{spec}: {report.values()}")
    frame = pd.DataFrame(rows)
    for i in range(terms + 1):
        frame[f"F{i}"] = pd.array(frame[f"F{i}"].tolist(), dtype="Int64")
    return frame


def main():
    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
    TABLES_DIR.mkdir(parents=True, exist_ok=True)

    tables = {
        'd4_subgroup_radius.csv': subgroup_radius_table("D4"),
        'group_occ.csv': occ_table(12),
        'fusion_sequences.csv': fusion_table(3),
    }

    for name, frame in tables.items():
        frame.to_csv(TABLES_DIR / name, index=False, lineterminator="\n")
        print(f"\n{name}:")
        print(render_table(frame, "text"), end="")

    discrepancies = tables['group_occ.csv'].query("occ_discrepancy")
    if not discrepancies.empty:
        print("\nOcc values that differ from the published table:")
        for _, row in discrepancies.iterrows():
            print(f"{row['group']}: computed {row['occ']}, published {row['published_occ']}")


if __name__ == "__main__":
    main()
