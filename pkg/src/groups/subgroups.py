import logging
from collections import deque
from typing import Iterable, List, Tuple, Union
import numpy as np

from src.exceptions import InvalidArgumentError
from src.groups.group import FiniteGroup, SubgroupMask
from src.orders import BaseOrder, EqualityOrder, PointwiseOrder
from src.poset import FiniteFunction, FunctionFamily
from src.poset.subsets import SubsetMask, iter_bits, mask_of

logger = logging.getLogger(__name__)

ORDERS = {"equality": EqualityOrder, "pointwise": PointwiseOrder}


def seed_bits(g: FiniteGroup, seed: Union[int, SubsetMask, Iterable[int]]) -> int:
    if isinstance(seed, SubsetMask):
        if seed.universe_size != g.order:
            raise InvalidArgumentError(f"Seed over {seed.universe_size} elements used with {g.name}")
        return seed.bits
    bits = seed if isinstance(seed, int) else mask_of(seed)
    if bits < 0 or bits >> g.order:
        raise InvalidArgumentError(f"Seed {bits:#x} has elements outside {g.name}")
    return bits


def closure_bits(g: FiniteGroup, bits: int) -> int:
    """Smallest subgroup containing the elements of `bits`, by squaring the member set until stable."""
    members = np.fromiter(iter_bits(bits | 1 << g.identity), dtype=np.int64)
    while True:
        products = np.unique(g.table[np.ix_(members, members)])
        if len(products) == len(members):
            return mask_of(members.tolist())
        members = products


def closure(g: FiniteGroup, seed: Union[int, SubsetMask, Iterable[int]]) -> SubgroupMask:
    """<seed>: the empty seed generates the identity subgroup."""
    return SubgroupMask(closure_bits(g, seed_bits(g, seed)), g.order)


def canonical_key(mask: SubsetMask) -> Tuple[int, int]:
    return (mask.bits.bit_count(), mask.bits)


def subgroups(g: FiniteGroup) -> List[SubgroupMask]:
    """
    Every subgroup once, ordered by size then bit pattern.

    Breadth-first from the identity subgroup: each subgroup is reached as
    <H, x> from a proper subgroup H, which generates the same set as closing
    every small element subset.
    """
    found = {closure_bits(g, 0)}
    queue = deque(found)
    while queue:
        h = queue.popleft()
        for x in range(g.order):
            if h >> x & 1:
                continue
            k = closure_bits(g, h | 1 << x)
            if k not in found:
                found.add(k)
                queue.append(k)
    result = sorted((SubgroupMask(bits, g.order) for bits in found), key=canonical_key)
    logger.debug(f"{g.name} has {len(result)} subgroups")
    return result


def cyclic_generators(g: FiniteGroup) -> List[int]:
    """One generator (the smallest index) per cyclic subgroup."""
    seen = {}
    for x in range(g.order):
        seen.setdefault(closure_bits(g, 1 << x), x)
    return sorted(seen.values())


def generating_set(g: FiniteGroup) -> Tuple[int, ...]:
    """
    A smallest generating set, the first one in canonical order.

    Any element can be swapped for the chosen generator of its cyclic subgroup
    without changing what a set generates, so only those generators are tried.
    A member of a smallest generating set never lies in the subgroup generated
    by the members before it, which prunes the enumeration without reordering it.
    """
    whole = (1 << g.order) - 1
    candidates = [x for x in cyclic_generators(g) if x != g.identity]

    def extend(start: int, chosen: Tuple[int, ...], generated: int, size: int):
        if len(chosen) == size:
            return chosen if generated == whole else None
        for i in range(start, len(candidates)):
            x = candidates[i]
            if generated >> x & 1:
                continue
            found = extend(i + 1, chosen + (x,), closure_bits(g, generated | 1 << x), size)
            if found is not None:
                return found
        return None

    for size in range(len(candidates) + 1):
        found = extend(0, (), closure_bits(g, 0), size)
        if found is not None:
            return found
    raise AssertionError(f"{g.name} is not generated by its own elements")


def rank(g: FiniteGroup) -> int:
    return len(generating_set(g))


def minimal_subgroups(g: FiniteGroup) -> List[SubgroupMask]:
    """Nontrivial subgroups with no smaller nontrivial subgroup: the cyclic subgroups of prime order."""
    trivial = 1 << g.identity
    found = set()
    for x in range(g.order):
        if x == g.identity:
            continue
        bits = closure_bits(g, 1 << x)
        size = bits.bit_count()
        if all(size % p for p in range(2, int(size ** 0.5) + 1)):
            found.add(bits)
    return sorted((SubgroupMask(bits, g.order) for bits in found if bits != trivial), key=canonical_key)


def characteristic_family(g: FiniteGroup, order: Union[str, BaseOrder] = "equality") -> FunctionFamily:
    """
    A_G: the 0/1 characteristic functions of the subgroups, in canonical subgroup order.

    "equality" compares them as plain functions; "pointwise" orders them by inclusion.
    """
    if isinstance(order, str):
        if order not in ORDERS:
            raise InvalidArgumentError(f"Unknown order {order!r}; expected one of {sorted(ORDERS)}")
        order = ORDERS[order]()
    functions = [
        FiniteFunction(tuple(h.bits >> i & 1 for i in range(g.order)), 2) for h in subgroups(g)
    ]
    return FunctionFamily(functions, order, ("0", "1"), g.labels)


def subgroup_as_group(g: FiniteGroup, h: SubsetMask) -> FiniteGroup:
    """H as a group in its own right; its elements are reindexed in ascending order of G's indices."""
    h = g.subgroup_mask(h)
    members = list(iter_bits(h.bits))
    position = {x: i for i, x in enumerate(members)}
    table = [[position[g.multiply(a, b)] for b in members] for a in members]
    return FiniteGroup(table, [g.labels[x] for x in members], f"{g.name}[{h.to_bitstring()}]")
