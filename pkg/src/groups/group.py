import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union
import numpy as np

from src.config.search_configs import SEARCH_CONFIGS
from src.exceptions import InvalidArgumentError, VerificationError
from src.poset.subsets import SubsetMask, iter_bits, mask_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubgroupMask(SubsetMask):
    """A subset of group elements that is closed under the product and contains the identity."""


class FiniteGroup:
    """
    A finite group given by its Cayley table on element indices 0..order-1.

    table[a, b] is the index of the product a*b. The table is verified on
    construction: Latin square, two-sided identity, inverses, and associativity
    (every triple up to the configured order, a seeded sample of triples above it).
    """

    def __init__(self, table: np.ndarray, labels: Optional[Sequence[str]] = None, name: str = "group"):
        table = np.array(table, dtype=np.int64)
        self.name = name
        self._verify_shape(table)
        self.table = table
        self.table.setflags(write=False)
        self.order = table.shape[0]
        self.labels: Tuple[str, ...] = tuple(labels) if labels is not None else tuple(map(str, range(self.order)))
        if len(self.labels) != self.order or len(set(self.labels)) != self.order:
            raise InvalidArgumentError(f"{name}: need {self.order} distinct element labels")
        self.identity = self._find_identity()
        self._inverses = self._find_inverses()
        self._verify_associativity()
        self._label_index = {label: i for i, label in enumerate(self.labels)}
        logger.debug(f"Verified Cayley table of {name} (order {self.order})")

    def _verify_shape(self, table: np.ndarray) -> None:
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise VerificationError(f"{self.name}: Cayley table must be a non-empty square, got {table.shape}")
        n = table.shape[0]
        expected = np.arange(n)
        if (np.sort(table, axis=1) != expected).any() or (np.sort(table, axis=0) != expected[:, None]).any():
            raise VerificationError(f"{self.name}: Cayley table is not a Latin square")

    def _find_identity(self) -> int:
        expected = np.arange(self.order)
        rows = np.flatnonzero((self.table == expected).all(axis=1) & (self.table.T == expected).all(axis=1))
        if len(rows) != 1:
            raise VerificationError(f"{self.name}: no two-sided identity")
        return int(rows[0])

    def _find_inverses(self) -> np.ndarray:
        right = np.argmax(self.table == self.identity, axis=1)
        if (self.table[right, np.arange(self.order)] != self.identity).any():
            raise VerificationError(f"{self.name}: some element lacks a two-sided inverse")
        return right

    def _verify_associativity(self) -> None:
        config = SEARCH_CONFIGS["groups"]
        t = self.table
        if self.order <= config["exhaustive_verify_order"]:
            left = t[t]
            right = t[np.arange(self.order)[:, None, None], t[None, :, :]]
            ok = np.array_equal(left, right)
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, self.order, size=(3, config["associativity_samples"]))
            ok = np.array_equal(t[t[a, b], c], t[a, t[b, c]])
            logger.info(f"{self.name}: associativity checked on {config['associativity_samples']} sampled triples")
        if not ok:
            raise VerificationError(f"{self.name}: Cayley table is not associative")

    def multiply(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self._inverses[a])

    def element(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise InvalidArgumentError(f"{self.name} has no element labelled {label!r}") from None

    def is_subgroup(self, bits: Union[int, SubsetMask]) -> bool:
        bits = bits.bits if isinstance(bits, SubsetMask) else bits
        if not bits >> self.identity & 1 or bits >> self.order:
            return False
        members = np.fromiter(iter_bits(bits), dtype=np.int64)
        return mask_of(np.unique(self.table[np.ix_(members, members)]).tolist()) == bits

    def subgroup_mask(self, bits: Union[int, SubsetMask, Iterable[int]]) -> SubgroupMask:
        """Validate and wrap a subset of element indices as a subgroup."""
        if isinstance(bits, SubsetMask):
            bits = bits.bits
        elif not isinstance(bits, int):
            bits = mask_of(bits)
        if not self.is_subgroup(bits):
            raise InvalidArgumentError(f"{self.describe(SubsetMask(bits, self.order))} is not a subgroup of {self.name}")
        return SubgroupMask(bits, self.order)

    def trivial_subgroup(self) -> SubgroupMask:
        return SubgroupMask(1 << self.identity, self.order)

    def whole(self) -> SubgroupMask:
        return SubgroupMask((1 << self.order) - 1, self.order)

    def describe(self, mask: SubsetMask) -> str:
        return "{" + ", ".join(self.labels[i] for i in iter_bits(mask.bits)) + "}"

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order {self.order})"
