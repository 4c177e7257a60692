"""Fusion sets and fusion sequences of (A_G, inclusion).

In A_G ordered by inclusion, the fusion set of S is the set of subgroups
generated by subsets of S. That gives two ways to get every fusion set of
A_G without testing members one at a time: close subsets of S directly, or
grow the set from the identity subgroup by joining one element at a time.
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple, Union

from src.config.catalog import PUBLISHED_FUSION
from src.config.search_configs import SEARCH_CONFIGS
from src.exceptions import InvalidArgumentError, VerificationError
from src.groups.group import FiniteGroup, SubgroupMask
from src.groups.subgroups import characteristic_family, closure_bits, rank, seed_bits, subgroups
from src.poset import AscendentResult, FunctionFamily, FusionStatus, FusionTerm, ascendent, fusion_sequence
from src.poset.subsets import SubsetMask, iter_bits, mask_of, sweep_order

logger = logging.getLogger(__name__)


class JoinTable:
    """<H, x> as a subgroup index, for every subgroup H (canonical order) and element x."""

    def __init__(self, g: FiniteGroup):
        self.group = g
        self.subgroups = subgroups(g)
        self.position = {h.bits: i for i, h in enumerate(self.subgroups)}
        self.joins: List[List[int]] = [
            [self.position[closure_bits(g, h.bits | 1 << x)] for x in range(g.order)] for h in self.subgroups
        ]
        self.trivial = self.position[1 << g.identity]

    def join_all(self, members: int, x: int) -> int:
        """The member mask {<H, x> : H in members}."""
        joined = 0
        for i in iter_bits(members):
            joined |= 1 << self.joins[i][x]
        return joined


def _sweep_fusion_set(g: FiniteGroup, bits: int) -> FrozenSet[int]:
    elements = list(iter_bits(bits))
    return frozenset(
        closure_bits(g, mask_of(combo)) for size in range(len(elements) + 1) for combo in combinations(elements, size)
    )


def _fixpoint_fusion_set(joins: JoinTable, bits: int) -> FrozenSet[int]:
    members = 1 << joins.trivial
    while True:
        grown = members
        for x in iter_bits(bits):
            grown |= joins.join_all(members, x)
        if grown == members:
            return frozenset(joins.subgroups[i].bits for i in iter_bits(members))
        members = grown


def group_fusion_set(
    g: FiniteGroup,
    s: Union[int, SubsetMask],
    method: str = "auto",
    joins: Optional[JoinTable] = None,
) -> FrozenSet[SubgroupMask]:
    """
    {<R> : R a subset of s}.

    "sweep" closes every subset of s; "fixpoint" starts from the identity
    subgroup and keeps adjoining elements of s. "auto" sweeps up to the
    configured size of s and uses the fixpoint beyond it.
    """
    bits = seed_bits(g, s)
    if method == "auto":
        method = "sweep" if bits.bit_count() <= SEARCH_CONFIGS["fusion"]["fixpoint_threshold"] else "fixpoint"
    if method == "sweep":
        found = _sweep_fusion_set(g, bits)
    elif method == "fixpoint":
        found = _fixpoint_fusion_set(joins or JoinTable(g), bits)
    else:
        raise InvalidArgumentError(f"Unknown fusion set method: {method}")
    return frozenset(SubgroupMask(b, g.order) for b in found)


def all_fusion_masks(joins: JoinTable) -> List[int]:
    """
    The fusion set of every S in G as a member mask over A_G, in canonical sweep order.

    F[S] = F[S - x] together with {<H, x> : H in F[S - x]}, where x is the
    lowest element of S; masks are filled in increasing integer order.
    """
    n = joins.group.order
    fused = [0] * (1 << n)
    fused[0] = 1 << joins.trivial
    cache: Dict[Tuple[int, int], int] = {}
    for s in range(1, 1 << n):
        low = s & -s
        previous = fused[s ^ low]
        key = (previous, low)
        if key not in cache:
            cache[key] = previous | joins.join_all(previous, low.bit_length() - 1)
        fused[s] = cache[key]
    return [fused[s] for s in sweep_order(n).tolist()]


def group_first_ascendent(g: FiniteGroup, joins: Optional[JoinTable] = None) -> Callable[[FunctionFamily, int], AscendentResult]:
    """An ascendent builder for A_G that takes its fusion sets from the join table."""

    def build(family: FunctionFamily, budget: int) -> AscendentResult:
        if 1 << g.order > budget:
            logger.warning(f"{g.name}: first ascendent needs {1 << g.order} subsets, over the budget of {budget}")
            return AscendentResult(None, FusionStatus.BUDGET_EXCEEDED)
        return ascendent(family, budget, fusion_masks=all_fusion_masks(joins or JoinTable(g)))

    return build


def f0_via_rank(g: FiniteGroup) -> int:
    return 2 ** rank(g)


@dataclass(frozen=True)
class FusionReport:
    group: str
    terms: Tuple[FusionTerm, ...]
    budget: int
    published: Optional[Tuple[Optional[int], ...]] = field(default=None)

    @property
    def exceeded(self) -> bool:
        return any(t.status is FusionStatus.BUDGET_EXCEEDED for t in self.terms)

    def values(self) -> List[Optional[int]]:
        return [t.value for t in self.terms]

    def to_row(self) -> Dict[str, object]:
        """group, F0..Fk with "?" where a term is not computed."""
        row: Dict[str, object] = {"group": self.group}
        for t in self.terms:
            row[f"F{t.index}"] = t.value if t.value is not None else "?"
        return row

    def to_record(self) -> Dict[str, object]:
        return {
            "group": self.group,
            "budget": self.budget,
            "terms": [{"index": t.index, "value": t.value, "status": t.status.value} for t in self.terms],
        }

    def disagreements(self) -> List[int]:
        """Indices of computed terms that differ from a printed value."""
        if self.published is None:
            return []
        return [
            t.index
            for t in self.terms
            if t.index < len(self.published)
            and self.published[t.index] is not None
            and t.value is not None
            and t.value != self.published[t.index]
        ]


def fusion_sequence_group(g: FiniteGroup, k: int, budget: Optional[int] = None) -> FusionReport:
    """
    F_0..F_k for (A_G, inclusion).

    The first ascendent comes from the join table. F_0 is checked against
    2^rank; when F_0 itself is over budget the rank value stands in for it.
    """
    budget = SEARCH_CONFIGS["poset"]["budget"] if budget is None else budget
    joins = JoinTable(g)
    family = characteristic_family(g, "pointwise")
    terms = fusion_sequence(family, k, budget, first_ascendent=group_first_ascendent(g, joins))

    by_rank = f0_via_rank(g)
    first = terms[0]
    if first.status is FusionStatus.COMPUTED and first.value != by_rank:
        raise VerificationError(f"{g.name}: F_0 = {first.value} but 2^rank = {by_rank}")
    if first.status is FusionStatus.BUDGET_EXCEEDED:
        logger.info(f"{g.name}: F_0 over budget, using 2^rank = {by_rank}")
        terms[0] = FusionTerm(0, by_rank, FusionStatus.COMPUTED)

    report = FusionReport(g.name, tuple(terms), budget, PUBLISHED_FUSION.get(g.name))
    for index in report.disagreements():
        logger.warning(f"{g.name}: F_{index} = {terms[index].value}, published {report.published[index]}")
    return report


@dataclass(frozen=True)
class PeriodicityReport:
    group: str
    prefix: Tuple[int, ...]
    period: Optional[int]
    terms: Tuple[FusionTerm, ...]


def shortest_period(prefix: Tuple[int, ...]) -> Optional[int]:
    """Smallest p with prefix[i] == prefix[i + p] throughout, seen at least twice in the prefix."""
    for p in range(1, len(prefix) // 2 + 1):
        if all(prefix[i] == prefix[i + p] for i in range(len(prefix) - p)):
            return p
    return None


def periodicity_probe(g: FiniteGroup, k: int, budget: Optional[int] = None) -> PeriodicityReport:
    """The shortest period the computed prefix of the fusion sequence is consistent with. Claims nothing beyond it."""
    report = fusion_sequence_group(g, k, budget)
    prefix: List[int] = []
    for t in report.terms:
        if t.value is None:
            break
        prefix.append(t.value)
    period = shortest_period(tuple(prefix))
    logger.info(f"{g.name}: prefix {prefix}, candidate period {period}")
    return PeriodicityReport(g.name, tuple(prefix), period, report.terms)
