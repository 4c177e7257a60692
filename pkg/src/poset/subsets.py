"""Bit-vector subsets of a finite universe and their canonical enumeration.

A subset of {0, .., n-1} is an int whose bit i is set iff i belongs to it.
Canonical order is cardinality ascending, then lexicographic on the sorted
tuple of positions ({0,1} < {0,2} < {1,2}). Every sweep and every witness in
the package follows this order.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Tuple
import numpy as np

from src.exceptions import InvalidArgumentError


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def canonical_subsets(universe_size: int, max_size: Optional[int] = None) -> Iterator[int]:
    """Yield every subset mask of the universe in canonical order."""
    top = universe_size if max_size is None else min(max_size, universe_size)
    for size in range(top + 1):
        for combo in combinations(range(universe_size), size):
            yield mask_of(combo)


def sweep_order(universe_size: int) -> np.ndarray:
    """All 2^n subset masks as a numpy array, in canonical order."""
    subsets = np.arange(1 << universe_size, dtype=np.uint64)
    counts = np.bitwise_count(subsets)
    # Within one cardinality, lexicographic order on position tuples is the
    # descending order of the bit-reversed mask.
    reversed_bits = np.zeros_like(subsets)
    for i in range(universe_size):
        bit = (subsets >> np.uint64(i)) & np.uint64(1)
        reversed_bits |= bit << np.uint64(universe_size - 1 - i)
    order = np.lexsort((-reversed_bits.astype(np.int64), counts))
    dtype = np.uint32 if universe_size <= 32 else np.uint64
    return subsets[order].astype(dtype)


@dataclass(frozen=True)
class SubsetMask:
    """A subset S of a finite universe (a domain, or a list of family members)."""

    bits: int
    universe_size: int

    def __post_init__(self):
        if self.universe_size < 0:
            raise InvalidArgumentError(f"Universe size must be non-negative, got {self.universe_size}")
        if self.bits < 0 or self.bits >> self.universe_size:
            raise InvalidArgumentError(
                f"Mask {self.bits:#x} has bits outside a universe of size {self.universe_size}"
            )

    @classmethod
    def from_indices(cls, indices: Iterable[int], universe_size: int) -> "SubsetMask":
        indices = list(indices)
        for i in indices:
            if not 0 <= i < universe_size:
                raise InvalidArgumentError(f"Index {i} outside universe of size {universe_size}")
        return cls(mask_of(indices), universe_size)

    @classmethod
    def from_bitstring(cls, text: str) -> "SubsetMask":
        """Parse a 0/1 string whose first character is position 0."""
        if any(ch not in "01" for ch in text):
            raise InvalidArgumentError(f"Not a 0/1 string: {text!r}")
        return cls(mask_of(i for i, ch in enumerate(text) if ch == "1"), len(text))

    @classmethod
    def empty(cls, universe_size: int) -> "SubsetMask":
        return cls(0, universe_size)

    @classmethod
    def full(cls, universe_size: int) -> "SubsetMask":
        return cls((1 << universe_size) - 1, universe_size)

    def indices(self) -> Tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def issubset(self, other: "SubsetMask") -> bool:
        return self.bits & ~other.bits == 0

    def union(self, other: "SubsetMask") -> "SubsetMask":
        if other.universe_size != self.universe_size:
            raise InvalidArgumentError("Cannot combine masks over different universes")
        return SubsetMask(self.bits | other.bits, self.universe_size)

    def to_bitstring(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.universe_size))

    def __contains__(self, index: int) -> bool:
        return bool(self.bits >> index & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()
