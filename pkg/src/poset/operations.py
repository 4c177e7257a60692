"""Occam sets, radius, fusion sets, fusion numbers and ascendents of a poset of functions."""
import logging
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Callable, FrozenSet, List, Optional, Sequence

from src.config.search_configs import SEARCH_CONFIGS
from src.exceptions import InvalidArgumentError
from src.orders import PointwiseOrder
from src.poset.functions import FiniteFunction, FunctionFamily
from src.poset.subsets import SubsetMask, iter_bits, mask_of, sweep_order
from src.poset.sweep import sweep_fusion_masks, sweep_fusion_number

logger = logging.getLogger(__name__)


class FusionStatus(str, Enum):
    COMPUTED = "computed"
    BUDGET_EXCEEDED = "budget_exceeded"
    NO_MAXIMUM = "omitted_no_maximum"


@dataclass(frozen=True)
class RadiusResult:
    value: int
    witness: SubsetMask


@dataclass(frozen=True)
class FusionValue:
    value: Optional[int]
    status: FusionStatus
    subsets_visited: int = 0

    @property
    def computed(self) -> bool:
        return self.status is FusionStatus.COMPUTED


@dataclass(frozen=True)
class FusionTerm:
    index: int
    value: Optional[int]
    status: FusionStatus


@dataclass(frozen=True)
class AscendentResult:
    family: Optional[FunctionFamily]
    status: FusionStatus
    subsets_visited: int = 0


class _BudgetExhausted(Exception):
    pass


def _budget(budget: Optional[int]) -> int:
    return SEARCH_CONFIGS["poset"]["budget"] if budget is None else budget


def _check_mask(family: FunctionFamily, s: SubsetMask) -> int:
    if s.universe_size != family.domain_size:
        raise InvalidArgumentError(
            f"Subset over a universe of {s.universe_size} used with a domain of size {family.domain_size}"
        )
    return s.bits


def restriction_agrees(f: FiniteFunction, g: FiniteFunction, s: SubsetMask) -> bool:
    """True iff f and g take equal values at every position of s."""
    if f.domain_size != g.domain_size or s.universe_size != f.domain_size:
        raise InvalidArgumentError(
            f"Dimension mismatch: domains {f.domain_size} and {g.domain_size}, subset universe {s.universe_size}"
        )
    return all(f.values[i] == g.values[i] for i in iter_bits(s.bits))


def agreeing_members(family: FunctionFamily, index: int, s: SubsetMask) -> List[int]:
    bits = _check_mask(family, s)
    return [g for g, mask in enumerate(family.disagreement_masks(index)) if mask & bits == 0]


def least_among(family: FunctionFamily, members: Sequence[int]) -> Optional[int]:
    """The member that is <= every other member of `members`, if there is one."""
    leq = family.leq
    for candidate in members:
        if all(leq[candidate, other] for other in members):
            return candidate
    return None


def least(family: FunctionFamily) -> Optional[int]:
    return least_among(family, range(len(family)))


def maximum(family: FunctionFamily) -> Optional[int]:
    leq = family.leq
    for candidate in range(len(family)):
        if leq[:, candidate].all():
            return candidate
    return None


def is_occam(family: FunctionFamily, index: int, s: SubsetMask) -> bool:
    """True iff member `index` is the least element of the members agreeing with it on s."""
    family.check_index(index)
    return least_among(family, agreeing_members(family, index, s)) == index


def occam_on(family: FunctionFamily, index: int, bits: int) -> bool:
    return all(bits & blocker for blocker in family.blockers(index))


def radius(family: FunctionFamily, index: int) -> RadiusResult:
    """
    Minimum size of an Occam set for member `index`.

    The witness is the first minimum-size Occam set in canonical order. Only
    positions that occur in some blocker can belong to a minimum Occam set, so
    the enumeration is restricted to them without changing that order.
    """
    family.check_index(index)
    blockers = family.blockers(index)
    if not blockers:
        return RadiusResult(0, SubsetMask.empty(family.domain_size))
    relevant = sorted(iter_bits(mask_of(p for b in blockers for p in iter_bits(b))))
    for size in range(1, len(relevant) + 1):
        for combo in combinations(relevant, size):
            bits = mask_of(combo)
            if all(bits & blocker for blocker in blockers):
                return RadiusResult(size, SubsetMask(bits, family.domain_size))
    raise AssertionError("the full domain is always Occam for a family of distinct functions")


def fusion_set(family: FunctionFamily, s: SubsetMask) -> FrozenSet[int]:
    """F_S: the members that are Occam on s."""
    bits = _check_mask(family, s)
    return frozenset(g for g in range(len(family)) if occam_on(family, g, bits))


def _fusion_size(family: FunctionFamily, bits: int) -> int:
    return sum(1 for g in range(len(family)) if occam_on(family, g, bits))


def _search_fusion_number(family: FunctionFamily, index: int, budget: int) -> FusionValue:
    """
    Branch and bound over Occam sets of member `index`.

    A node holds the positions chosen so far and the positions ruled out. It
    branches on the positions of one unmet blocker; since F_S only grows with
    S, the fusion set of the chosen positions bounds every completion from below.
    Every minimal Occam set contains a leaf of this tree, so the minimum is exact.
    Each node is charged one unit per member it tests against the budget.
    """
    blockers = family.blockers(index)
    best = [len(family) + 1]
    visited = [0]

    def visit(chosen: int, excluded: int):
        visited[0] += len(family)
        if visited[0] > budget:
            raise _BudgetExhausted
        size = _fusion_size(family, chosen)
        if size >= best[0]:
            return
        unmet = [b for b in blockers if not chosen & b]
        if not unmet:
            best[0] = size
            return
        branch = min(unmet, key=lambda b: ((b & ~excluded).bit_count(), b))
        for position in iter_bits(branch & ~excluded):
            visit(chosen | 1 << position, excluded)
            excluded |= 1 << position

    try:
        visit(0, 0)
    except _BudgetExhausted:
        logger.warning(f"Fusion number search for member {index} stopped after {budget} member evaluations")
        return FusionValue(None, FusionStatus.BUDGET_EXCEEDED, budget)
    return FusionValue(best[0], FusionStatus.COMPUTED, visited[0])


def fusion_number(
    family: FunctionFamily,
    index: int,
    budget: Optional[int] = None,
    method: str = "auto",
) -> FusionValue:
    """
    min |F_S| over the subsets S with member `index` in F_S.

    Args:
        family: the poset of functions
        index: member whose fusion number is wanted
        budget: most subsets to visit (default from SEARCH_CONFIGS)
        method: "sweep" visits all 2^d subsets, "search" runs the branch and
            bound, "auto" sweeps when 2^d fits the budget and searches otherwise

    Returns:
        FusionValue: the value, or status budget_exceeded
    """
    family.check_index(index)
    budget = _budget(budget)
    subset_count = 1 << family.domain_size
    if method not in ("auto", "sweep", "search"):
        raise InvalidArgumentError(f"Unknown fusion number method: {method}")
    if method == "sweep" or (method == "auto" and subset_count <= budget):
        if subset_count > budget:
            return FusionValue(None, FusionStatus.BUDGET_EXCEEDED, 0)
        value = sweep_fusion_number(family, index, sweep_order(family.domain_size))
        return FusionValue(value, FusionStatus.COMPUTED, subset_count)
    logger.info(f"Domain of size {family.domain_size} exceeds the sweep budget; searching instead")
    return _search_fusion_number(family, index, budget)


def family_from_fusion_masks(
    masks: Sequence[int],
    family: FunctionFamily,
) -> FunctionFamily:
    """The family of characteristic functions of the given fusion sets, on the members of `family`."""
    distinct = list(dict.fromkeys(masks))
    size = len(family)
    functions = [FiniteFunction(tuple(mask >> i & 1 for i in range(size)), 2) for mask in distinct]
    return FunctionFamily(functions, PointwiseOrder(), ("0", "1"), family.words())


def ascendent(
    family: FunctionFamily,
    budget: Optional[int] = None,
    fusion_masks: Optional[Sequence[int]] = None,
) -> AscendentResult:
    """
    The first ascendent {chi_{F_S} : S a subset of the domain}, ordered by inclusion.

    Members appear in first-encounter order over the canonical sweep. Callers
    that already know every fusion set (in canonical sweep order) pass them as
    `fusion_masks` and skip the sweep.
    """
    budget = _budget(budget)
    subset_count = 1 << family.domain_size
    if fusion_masks is None:
        if subset_count > budget:
            logger.warning(f"Ascendent needs {subset_count} subsets, over the budget of {budget}")
            return AscendentResult(None, FusionStatus.BUDGET_EXCEEDED)
        fusion_masks = sweep_fusion_masks(family, sweep_order(family.domain_size))
    result = family_from_fusion_masks(fusion_masks, family)
    logger.info(f"Ascendent of {len(family)} members has {len(result)} members")
    return AscendentResult(result, FusionStatus.COMPUTED, subset_count)


def fusion_sequence(
    family: FunctionFamily,
    k: int,
    budget: Optional[int] = None,
    first_ascendent: Optional[Callable[[FunctionFamily, int], AscendentResult]] = None,
) -> List[FusionTerm]:
    """
    F_0..F_k: fusion numbers of the maxima of the family and of its first k ascendents.

    F_0 is omitted (status omitted_no_maximum) when the family has no maximum.
    Once a step runs over budget, that term and all later ones are reported
    as budget_exceeded.
    """
    if k < 1:
        raise InvalidArgumentError(f"Number of terms must be at least 1, got {k}")
    budget = _budget(budget)
    terms: List[FusionTerm] = []

    top = maximum(family)
    if top is None:
        terms.append(FusionTerm(0, None, FusionStatus.NO_MAXIMUM))
        exceeded = False
    else:
        value = fusion_number(family, top, budget)
        terms.append(FusionTerm(0, value.value, value.status))
        exceeded = not value.computed

    current = family
    for n in range(1, k + 1):
        if exceeded:
            terms.append(FusionTerm(n, None, FusionStatus.BUDGET_EXCEEDED))
            continue
        build = first_ascendent if (n == 1 and first_ascendent is not None) else ascendent
        step = build(current, budget)
        if step.family is None:
            exceeded = True
            terms.append(FusionTerm(n, None, FusionStatus.BUDGET_EXCEEDED))
            continue
        current = step.family
        value = fusion_number(current, maximum(current), budget)
        terms.append(FusionTerm(n, value.value, value.status))
        exceeded = not value.computed
        logger.info(f"F_{n} = {value.value} ({value.status.value})")
    return terms
