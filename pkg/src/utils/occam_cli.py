import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, Optional, Sequence, Tuple
import pandas as pd

from src.config.catalog import PUBLISHED_OCC
from src.config.search_configs import SEARCH_CONFIGS
from src.exceptions import InvalidArgumentError, OccOverflowError, UsageError
from src.groups import (
    FiniteGroup,
    find_invariant_collisions,
    fusion_sequence_group,
    make_group,
    occ_by_hitting_set,
    occ_of_group,
    periodicity_probe,
    radius_report,
    rank,
    subgroup_radius,
)
from src.groups.census import census, census_specs
from src.occ import OccInstance, best_construction, exact_occ, theorem_upper_bound
from src.poset import FunctionFamily, fusion_sequence, radius
from src.poset.subsets import SubsetMask
from src.utils.family_loader import FamilyLoader, family_to_document
from src.utils.report_writer import FORMATS, has_exceeded, render_document, render_table, write_output


"""Command-line front end for radius, Occ(m,n,r), group radius and fusion computations.

Usage: python -m src.utils.occam_cli <command> [flags]
Commands: occ-bound, occ-construct, occ-exact, group-radius, group-occ,
          group-fusion, poset-radius, poset-fusion, census
Exit codes: 0 success, 2 some value over budget (partial output still written), 3 usage error
Logs: logs/<command>_<n>.log (OCCAM_LOG_DIR overrides the directory)
"""


COMMANDS = (
    "occ-bound",
    "occ-construct",
    "occ-exact",
    "group-radius",
    "group-occ",
    "group-fusion",
    "poset-radius",
    "poset-fusion",
    "census",
)

EXIT_OK = 0
EXIT_BUDGET = 2
EXIT_USAGE = 3


def setup_logging(command: str):
    log_dir = Path(SEARCH_CONFIGS["cli"]["log_dir"])
    log_dir.mkdir(parents=True, exist_ok=True)

    run_number = 1
    while True:
        log_file = log_dir / f"{command}_{run_number}.log"
        if not log_file.exists():
            break
        run_number += 1

    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(log_file),
            logging.StreamHandler()
        ]
    )
    return logging.getLogger(__name__)


class OccamArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = OccamArgumentParser(prog="occam", description="Occam sets, Occ(m,n,r) and group fusion sequences")
    parser.add_argument("command", choices=COMMANDS, help="Computation to run")
    parser.add_argument("--m", type=int, help="Domain size of Occ(m,n,r)")
    parser.add_argument("--n", type=int, help="Alphabet size of Occ(m,n,r)")
    parser.add_argument("--r", type=int, help="Radius bound of Occ(m,n,r)")
    parser.add_argument("--group", type=str, help="Group expression, e.g. D4, Z2xZ6, Dic3")
    parser.add_argument("--subgroup", type=str, help="Subgroup as a 0/1 string over the elements or comma-separated labels")
    parser.add_argument("--family", type=str, help="Path to a family file")
    parser.add_argument("--member", type=int, help="Index of a single family member")
    parser.add_argument("--terms", type=int, default=SEARCH_CONFIGS["fusion"]["terms"],
                        help="Number of fusion terms after F_0 (default: %(default)s)")
    parser.add_argument("--max-order", type=int, default=16, help="Largest group order in the census (default: 16)")
    parser.add_argument("--collisions", action="store_true", help="Census: list groups sharing order, rank and Occ")
    parser.add_argument("--probe", action="store_true", help="group-fusion: add the candidate period of the prefix")
    parser.add_argument("--budget", type=int, default=SEARCH_CONFIGS["cli"]["budget_log2"],
                        help="log2 of the subset budget per step (default: %(default)s)")
    parser.add_argument("--threads", type=int, default=SEARCH_CONFIGS["cli"]["threads"],
                        help="Worker threads; output does not depend on it")
    parser.add_argument("--format", choices=FORMATS, default=SEARCH_CONFIGS["cli"]["format"], help="Output format")
    parser.add_argument("--out", type=str, help="Write the report to this path instead of stdout")
    return parser


def parse_group_spec(spec: str) -> FiniteGroup:
    try:
        return make_group(spec)
    except InvalidArgumentError as e:
        raise UsageError(f"Bad group expression {spec!r}: {e}") from e


def parse_subgroup(g: FiniteGroup, text: str) -> SubsetMask:
    if len(text) == g.order and set(text) <= {"0", "1"}:
        mask = SubsetMask.from_bitstring(text)
    else:
        mask = SubsetMask.from_indices((g.element(label.strip()) for label in text.split(",")), g.order)
    return g.subgroup_mask(mask)


def _sequence_frame(name: str, terms) -> pd.DataFrame:
    row: Dict[str, object] = {"group": name}
    for t in terms:
        row[f"F{t.index}"] = t.value
        row[f"F{t.index}_status"] = t.status.value
    frame = pd.DataFrame([row])
    for t in terms:
        frame[f"F{t.index}"] = pd.array([t.value], dtype="Int64")
    return frame


class CommandRunner:
    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.logger = logging.getLogger(__name__)
        self.budget = 1 << args.budget
        self.loader = FamilyLoader()

    def _require(self, *names: str) -> None:
        missing = [f"--{n.replace('_', '-')}" for n in names if getattr(self.args, n) is None]
        if missing:
            raise UsageError(f"{self.args.command} needs {', '.join(missing)}")

    def _instance(self) -> OccInstance:
        self._require("m", "n", "r")
        return OccInstance(self.args.m, self.args.n, self.args.r)

    def _family(self) -> FunctionFamily:
        self._require("family")
        return self.loader.load(self.args.family)

    def validate(self) -> None:
        a = self.args
        if a.budget < 0 or a.budget > 62:
            raise UsageError(f"--budget must be between 0 and 62, got {a.budget}")
        if a.threads < 1:
            raise UsageError(f"--threads must be at least 1, got {a.threads}")
        if a.terms < 1:
            raise UsageError(f"--terms must be at least 1, got {a.terms}")
        needs = {
            "occ-bound": ("m", "n", "r"),
            "occ-construct": ("m", "n", "r"),
            "occ-exact": ("m", "n", "r"),
            "group-radius": ("group",),
            "group-occ": ("group",),
            "group-fusion": ("group",),
            "poset-radius": ("family",),
            "poset-fusion": ("family",),
            "census": (),
        }[a.command]
        self._require(*needs)

    def run(self) -> Tuple[str, bool]:
        """Render the command's report; the flag says whether any value ran over budget."""
        handler = getattr(self, "_" + self.args.command.replace("-", "_"))
        return handler()

    def _occ_bound(self) -> Tuple[str, bool]:
        inst = self._instance()
        witness = theorem_upper_bound(inst)
        document = {"m": inst.m, "n": inst.n, "r": inst.r, **witness.to_document()}
        return render_document(document, self.args.format), False

    def _occ_construct(self) -> Tuple[str, bool]:
        inst = self._instance()
        name, family = best_construction(inst)
        document = {
            "m": inst.m,
            "n": inst.n,
            "r": inst.r,
            "construction": name,
            "size": len(family),
            "family": family_to_document(family),
        }
        return render_document(document, self.args.format), False

    def _occ_exact(self) -> Tuple[str, bool]:
        certificate = exact_occ(self._instance(), self.budget)
        self.logger.info(f"Occ settled by {certificate.method}: lower {certificate.lower}, upper {certificate.upper}")
        if certificate.search_exhausted:
            self.logger.warning(f"Search stopped after {certificate.nodes} nodes; raise --budget to settle the interval")
        return render_document(certificate.to_document(), self.args.format), certificate.search_exhausted

    def _group_radius(self) -> Tuple[str, bool]:
        g = parse_group_spec(self.args.group)
        if self.args.subgroup is not None:
            h = parse_subgroup(g, self.args.subgroup)
            result = subgroup_radius(g, h)
            frame = pd.DataFrame(
                [{
                    "chi": h.to_bitstring(),
                    "radius": result.value,
                    "witness": g.describe(result.witness),
                }]
            )
        else:
            frame = radius_report(g, self.args.threads).to_frame(g.labels)
        return render_table(frame, self.args.format), False

    def _group_occ(self) -> Tuple[str, bool]:
        g = parse_group_spec(self.args.group)
        occ = occ_of_group(g)
        hitting, witness = occ_by_hitting_set(g)
        published = PUBLISHED_OCC.get(g.name)
        frame = pd.DataFrame(
            [{
                "group": g.name,
                "order": g.order,
                "rank": rank(g),
                "occ": occ,
                "occ_hitting": hitting,
                "witness": g.describe(witness),
                "published_occ": published[2] if published else None,
                "occ_discrepancy": bool(published and published[2] != occ),
            }]
        )
        frame["published_occ"] = pd.array(frame["published_occ"].tolist(), dtype="Int64")
        return render_table(frame, self.args.format), False

    def _group_fusion(self) -> Tuple[str, bool]:
        g = parse_group_spec(self.args.group)
        if self.args.probe:
            probe = periodicity_probe(g, self.args.terms, self.budget)
            frame = _sequence_frame(g.name, probe.terms)
            frame["period"] = pd.array([probe.period], dtype="Int64")
        else:
            frame = _sequence_frame(g.name, fusion_sequence_group(g, self.args.terms, self.budget).terms)
        return render_table(frame, self.args.format), has_exceeded(frame)

    def _poset_radius(self) -> Tuple[str, bool]:
        family = self._family()
        members = range(len(family)) if self.args.member is None else [family.check_index(self.args.member)]
        words = family.words()
        rows = []
        for i in members:
            result = radius(family, i)
            rows.append({"member": i, "function": words[i], "radius": result.value, "witness": result.witness.to_bitstring()})
        return render_table(pd.DataFrame(rows), self.args.format), False

    def _poset_fusion(self) -> Tuple[str, bool]:
        family = self._family()
        terms = fusion_sequence(family, self.args.terms, self.budget)
        frame = _sequence_frame(Path(self.args.family).stem, terms).rename(columns={"group": "family"})
        return render_table(frame, self.args.format), has_exceeded(frame)

    def _census(self) -> Tuple[str, bool]:
        if self.args.collisions:
            frame = find_invariant_collisions(census_specs(self.args.max_order))
            return render_table(frame, self.args.format), False
        frame = census(self.args.max_order, self.budget, self.args.terms, self.args.threads)
        return render_table(frame, self.args.format), has_exceeded(frame)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logger = setup_logging(args.command)
        runner = CommandRunner(args)
        runner.validate()
        logger.info(f"Running {args.command} with budget 2^{args.budget} and {args.threads} threads")
        text, exceeded = runner.run()
    except (UsageError, InvalidArgumentError, OccOverflowError, FileNotFoundError) as e:
        print(f"occam: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    write_output(text, args.out)
    if exceeded:
        logging.getLogger(__name__).warning("Some values ran over budget; they are marked as budget_exceeded")
        return EXIT_BUDGET
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
