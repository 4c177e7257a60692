"""Subgroup radius in (A_G, =), Occ(G), and the checks built on them."""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Tuple
import pandas as pd

from src.exceptions import InvalidArgumentError, VerificationError
from src.groups.constructors import make_group
from src.groups.group import FiniteGroup, SubgroupMask
from src.groups.subgroups import characteristic_family, minimal_subgroups, rank, subgroup_as_group, subgroups
from src.poset import FiniteFunction, FunctionFamily, RadiusResult, radius
from src.poset.subsets import SubsetMask, mask_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RadiusEntry:
    mask: SubgroupMask
    chi: str
    radius: int
    witness: SubsetMask


@dataclass(frozen=True)
class RadiusReport:
    group: str
    order: int
    rank: int
    entries: Tuple[RadiusEntry, ...]

    def to_frame(self, labels: Optional[Tuple[str, ...]] = None) -> pd.DataFrame:
        """One row per subgroup: chi, radius and the witness Occam set."""
        def witness(entry: RadiusEntry) -> str:
            if labels is None:
                return entry.witness.to_bitstring()
            return "{" + ", ".join(labels[i] for i in entry.witness.indices()) + "}"

        return pd.DataFrame(
            {
                "chi": [e.chi for e in self.entries],
                "radius": [e.radius for e in self.entries],
                "witness": [witness(e) for e in self.entries],
            }
        )


def _chi(g: FiniteGroup, h: SubsetMask) -> FiniteFunction:
    return FiniteFunction(tuple(h.bits >> i & 1 for i in range(g.order)), 2)


def subgroup_radius(g: FiniteGroup, h: SubsetMask, family: Optional[FunctionFamily] = None) -> RadiusResult:
    """
    R_G(H): the least |S| such that H is the only subgroup K with K and S
    meeting exactly where H and S meet.
    """
    h = g.subgroup_mask(h)
    family = family if family is not None else characteristic_family(g, "equality")
    return radius(family, family.index_of(_chi(g, h)))


def occ_by_hitting_set(g: FiniteGroup) -> Tuple[int, SubsetMask]:
    """
    Occ(G) as a smallest set of elements meeting every minimal subgroup outside the identity.

    Distinct subgroups of prime order share only the identity, so the smallest
    hitting set takes one element from each; the first in canonical order takes
    the smallest.
    """
    parts = [m.bits & ~(1 << g.identity) for m in minimal_subgroups(g)]
    for a, b in combinations(parts, 2):
        if a & b:
            raise VerificationError(f"{g.name}: two minimal subgroups share a non-identity element")
    witness = mask_of((p & -p).bit_length() - 1 for p in parts)
    return len(parts), SubsetMask(witness, g.order)


def occ_of_group(g: FiniteGroup, family: Optional[FunctionFamily] = None) -> int:
    """Occ(G) = R_G({e}), checked against the minimal-subgroup hitting set."""
    value = subgroup_radius(g, g.trivial_subgroup(), family).value
    hitting, _ = occ_by_hitting_set(g)
    if value != hitting:
        raise VerificationError(f"{g.name}: radius of the identity subgroup is {value} but the hitting set has {hitting}")
    return value


def check_rank_theorem(g: FiniteGroup) -> bool:
    """R_G(G) equals the rank of G."""
    by_radius = subgroup_radius(g, g.whole()).value
    by_rank = rank(g)
    if by_radius != by_rank:
        logger.warning(f"{g.name}: R_G(G) = {by_radius} but rank = {by_rank}")
    return by_radius == by_rank


def check_monotonicity(g: FiniteGroup, threads: int = 1) -> bool:
    """Occ(H) <= Occ(G) for every subgroup H, each H rebuilt as a group of its own."""
    bound = occ_of_group(g)
    masks = subgroups(g)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        values = list(pool.map(lambda h: occ_of_group(subgroup_as_group(g, h)), masks))
    violations = [(h, v) for h, v in zip(masks, values) if v > bound]
    for h, v in violations:
        logger.warning(f"{g.name}: subgroup {g.describe(h)} has Occ {v} > {bound}")
    return not violations


def rule_out_embedding(h: FiniteGroup, g: FiniteGroup) -> bool:
    """True when Occ(H) > Occ(G), so H is not isomorphic to any subgroup of G. False proves nothing."""
    return occ_of_group(h) > occ_of_group(g)


def radius_report(g: FiniteGroup, threads: int = 1) -> RadiusReport:
    family = characteristic_family(g, "equality").cache_blockers()
    masks = subgroups(g)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(lambda h: subgroup_radius(g, h, family), masks))
    entries = tuple(
        RadiusEntry(h, SubsetMask(h.bits, g.order).to_bitstring(), r.value, r.witness) for h, r in zip(masks, results)
    )
    group_rank = rank(g)
    if entries[-1].radius != group_rank:
        raise VerificationError(f"{g.name}: R_G(G) = {entries[-1].radius} but rank = {group_rank}")
    logger.info(f"{g.name}: radii {[e.radius for e in entries]}")
    return RadiusReport(g.name, g.order, group_rank, entries)


def find_invariant_collisions(specs: Iterable[str]) -> pd.DataFrame:
    """
    Pairs of groups that share order, rank and Occ.

    Groups are told apart by their expressions only; a row says nothing about
    whether the two are isomorphic.
    """
    invariants: List[Tuple[str, int, int, int]] = []
    for spec in specs:
        try:
            g = make_group(spec)
        except InvalidArgumentError as e:
            logger.warning(f"Skipping {spec}: {e}")
            continue
        invariants.append((spec, g.order, rank(g), occ_of_group(g)))
    rows = [
        {"group_a": a[0], "group_b": b[0], "order": a[1], "rank": a[2], "occ": a[3]}
        for a, b in combinations(invariants, 2)
        if a[1:] == b[1:]
    ]
    logger.info(f"{len(rows)} invariant collisions among {len(invariants)} groups")
    return pd.DataFrame(rows, columns=["group_a", "group_b", "order", "rank", "occ"])
