"""Upper bound on Occ(m,n,r) from counting classes of functions that agree on an r-set."""
import logging
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Tuple

from src.config.search_configs import SEARCH_CONFIGS
from src.exceptions import InvalidArgumentError, OccOverflowError

logger = logging.getLogger(__name__)

DOCUMENT_X_LIMIT = 4096


@dataclass(frozen=True)
class OccInstance:
    """Functions from an m-set to an n-set whose radii are all at most r."""

    m: int
    n: int
    r: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise InvalidArgumentError(f"Need m >= 1 and n >= 1, got m={self.m}, n={self.n}")
        if not 0 <= self.r <= self.m:
            raise InvalidArgumentError(f"Need 0 <= r <= m, got r={self.r}, m={self.m}")

    def check_width(self) -> None:
        bits = SEARCH_CONFIGS["occ"]["arithmetic_bits"]
        if self.n ** self.m >= 1 << bits:
            raise OccOverflowError(f"n^m = {self.n}^{self.m} does not fit in {bits} bits")


@dataclass(frozen=True)
class BoundWitness:
    """
    The bound p with class-size multiplicities: x_i classes of size i, i = 1..length.

    Only non-zero multiplicities are stored; `x` expands them.
    """

    p: int
    length: int
    counts: Tuple[Tuple[int, int], ...] = field(default=())

    @property
    def x(self) -> List[int]:
        values = [0] * self.length
        for size, count in self.counts:
            values[size - 1] = count
        return values

    def multiplicity(self, size: int) -> int:
        return dict(self.counts).get(size, 0)

    def satisfies(self, inst: OccInstance) -> bool:
        total = sum(size * count for size, count in self.counts)
        classes = sum(count for _, count in self.counts)
        return (
            total == self.p
            and classes <= inst.n ** inst.r
            and all(1 <= size <= self.length for size, _ in self.counts)
            and self.p <= comb(inst.m, inst.r) * self.multiplicity(1)
        )

    def to_document(self) -> Dict:
        if self.length <= DOCUMENT_X_LIMIT:
            return {"p": self.p, "x": self.x}
        return {"p": self.p, "x_length": self.length, "x_nonzero": {str(s): c for s, c in self.counts}}


def _largest_fill(target: int, classes: int, largest: int) -> int:
    """Largest sum <= target of at most `classes` class sizes drawn from 2..largest."""
    if classes == 0 or largest == 1 or target < 2:
        return 0
    if largest == 2:
        return target - target % 2
    return target


def _class_sizes(total: int, largest: int) -> Counter:
    """A multiset of sizes in 2..largest summing to `total`, using as few classes as possible."""
    sizes: Counter = Counter()
    if total == 0:
        return sizes
    full, rest = divmod(total, largest)
    if rest == 0:
        sizes[largest] += full
    elif rest == 1:
        sizes[largest] += full - 1
        sizes[largest - 1] += 1
        sizes[2] += 1
    else:
        sizes[largest] += full
        sizes[rest] += 1
    return +sizes


def _bound_at(x1: int, classes: int, largest: int, cover: int) -> int:
    return x1 + _largest_fill(min((classes - x1) * largest, (cover - 1) * x1), classes - x1, largest)


def theorem_upper_bound(inst: OccInstance) -> BoundWitness:
    """
    The largest p = sum i*x_i with sum x_i <= n^r and p <= C(m,r)*x_1.

    For a fixed x_1 the best use of the remaining n^r - x_1 classes is to make
    them as large as allowed (n^(m-r)), capped by C(m,r)*x_1. The capped value is
    increasing in x_1 below the crossing point x_1 = n^r n^(m-r) / (C(m,r) + n^(m-r) - 1)
    and non-increasing above it, so only x_1 near the crossing and the two ends
    need evaluating.
    """
    inst.check_width()
    classes = inst.n ** inst.r
    largest = inst.n ** (inst.m - inst.r)
    cover = comb(inst.m, inst.r)
    crossing = classes * largest // (cover + largest - 1)
    candidates = {0, classes} | set(range(max(0, crossing - 3), min(classes, crossing + 3) + 1))
    best_x1 = max(sorted(candidates), key=lambda x1: (_bound_at(x1, classes, largest, cover), -x1))
    p = _bound_at(best_x1, classes, largest, cover)

    sizes = _class_sizes(p - best_x1, largest)
    if best_x1:
        sizes[1] += best_x1
    witness = BoundWitness(p, largest, tuple(sorted(sizes.items())))
    if not witness.satisfies(inst):
        raise AssertionError(f"bound witness {witness} violates the constraints for {inst}")
    logger.debug(f"Upper bound for {inst}: p = {p} at x_1 = {best_x1}")
    return witness


def brute_force_upper_bound(inst: OccInstance) -> int:
    """
    The same maximum by exhaustion: for every x_1, every sum reachable with a
    given number of classes of sizes 2..n^(m-r). Feasible when n^r and n^(m-r)
    are small.
    """
    classes = inst.n ** inst.r
    largest = inst.n ** (inst.m - inst.r)
    cover = comb(inst.m, inst.r)
    reachable = [{0}]
    for _ in range(classes):
        reachable.append({s + size for s in reachable[-1] for size in range(2, largest + 1)})
    best = 0
    for x1 in range(classes + 1):
        for used in range(classes - x1 + 1):
            for rest in reachable[used]:
                if x1 + rest <= cover * x1:
                    best = max(best, x1 + rest)
    return best


def enumerate_bound_vectors(inst: OccInstance) -> int:
    """Literal maximum over every x-vector with sum x_i <= n^r. Only for tiny instances."""
    classes = inst.n ** inst.r
    largest = inst.n ** (inst.m - inst.r)
    cover = comb(inst.m, inst.r)
    best = 0

    def extend(size: int, remaining: int, x1: int, total: int):
        nonlocal best
        if size > largest:
            if total <= cover * x1:
                best = max(best, total)
            return
        for count in range(remaining + 1):
            extend(size + 1, remaining - count, count if size == 1 else x1, total + size * count)

    extend(1, classes, 0, 0)
    return best
