from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple
import numpy as np

from src.exceptions import InvalidArgumentError
from src.orders import BaseOrder, EqualityOrder


def default_alphabet(size: int) -> Tuple[str, ...]:
    return tuple(str(i) for i in range(size))


def row_masks(matrix: np.ndarray) -> List[int]:
    """Encode each boolean row as an int with bit j set iff column j is true."""
    width = matrix.shape[1]
    if width <= 62:
        weights = np.left_shift(np.int64(1), np.arange(width, dtype=np.int64))
        return [int(x) for x in matrix.astype(np.int64) @ weights]
    packed = np.packbits(matrix, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def minimal_masks(masks: Iterable[int]) -> Tuple[int, ...]:
    """Inclusion-minimal elements of a collection of masks, smallest first."""
    kept: List[int] = []
    for mask in sorted(set(masks), key=lambda m: (m.bit_count(), m)):
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    return tuple(kept)


@dataclass(frozen=True)
class FiniteFunction:
    """A function {0..m-1} -> {0..n-1}, stored as the word of its values."""

    values: Tuple[int, ...]
    codomain_size: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        for v in self.values:
            if not 0 <= v < self.codomain_size:
                raise InvalidArgumentError(f"Value {v} outside a codomain of size {self.codomain_size}")

    @property
    def domain_size(self) -> int:
        return len(self.values)

    @classmethod
    def from_word(cls, word: Sequence[str], alphabet: Sequence[str]) -> "FiniteFunction":
        lookup = {symbol: i for i, symbol in enumerate(alphabet)}
        try:
            return cls(tuple(lookup[symbol] for symbol in word), len(alphabet))
        except KeyError as e:
            raise InvalidArgumentError(f"Symbol {e.args[0]!r} of word {word!r} is not in the alphabet") from e

    def word(self, alphabet: Sequence[str]) -> str:
        separator = "" if all(len(symbol) == 1 for symbol in alphabet) else ","
        return separator.join(alphabet[v] for v in self.values)


class FunctionFamily:
    """
    A poset (A, <=) of distinct functions sharing one domain and one codomain.

    Members are addressed by index. The order relation is materialised once as
    a boolean matrix, and each member's blockers (see `blockers`) are cached.
    """

    def __init__(
        self,
        functions: Sequence[FiniteFunction],
        order: Optional[BaseOrder] = None,
        alphabet: Optional[Sequence[str]] = None,
        domain_labels: Optional[Sequence[str]] = None,
    ):
        functions = tuple(functions)
        if not functions:
            raise InvalidArgumentError("A family needs at least one function")
        domain_size = functions[0].domain_size
        codomain_size = functions[0].codomain_size
        for f in functions:
            if f.domain_size != domain_size or f.codomain_size != codomain_size:
                raise InvalidArgumentError(
                    f"Function {f.values} does not share domain size {domain_size} "
                    f"and codomain size {codomain_size}"
                )
        seen: Dict[Tuple[int, ...], int] = {}
        for i, f in enumerate(functions):
            if f.values in seen:
                raise InvalidArgumentError(f"Members {seen[f.values]} and {i} are the same function {f.values}")
            seen[f.values] = i

        self._functions = functions
        self._index = seen
        self._order = order if order is not None else EqualityOrder()
        self._domain_size = domain_size
        self._codomain_size = codomain_size
        self._alphabet = tuple(alphabet) if alphabet is not None else default_alphabet(codomain_size)
        if len(self._alphabet) != codomain_size:
            raise InvalidArgumentError(
                f"Alphabet has {len(self._alphabet)} symbols but the codomain has {codomain_size}"
            )
        self._domain_labels = (
            tuple(domain_labels) if domain_labels is not None else tuple(str(i) for i in range(domain_size))
        )
        self._values = np.array([f.values for f in functions], dtype=np.int64).reshape(len(functions), domain_size)
        self._values.setflags(write=False)
        self._leq = np.array(self._order.relation(self._values), dtype=bool)
        self._leq.setflags(write=False)
        self._blockers: Dict[int, Tuple[int, ...]] = {}

    @classmethod
    def from_words(
        cls,
        words: Iterable[Sequence[str]],
        alphabet: Sequence[str],
        order: Optional[BaseOrder] = None,
    ) -> "FunctionFamily":
        return cls([FiniteFunction.from_word(w, alphabet) for w in words], order, alphabet)

    @property
    def functions(self) -> Tuple[FiniteFunction, ...]:
        return self._functions

    @property
    def order(self) -> BaseOrder:
        return self._order

    @property
    def domain_size(self) -> int:
        return self._domain_size

    @property
    def codomain_size(self) -> int:
        return self._codomain_size

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return self._alphabet

    @property
    def domain_labels(self) -> Tuple[str, ...]:
        return self._domain_labels

    @property
    def values(self) -> np.ndarray:
        return self._values

    @property
    def leq(self) -> np.ndarray:
        return self._leq

    def __len__(self) -> int:
        return len(self._functions)

    def __getitem__(self, index: int) -> FiniteFunction:
        return self._functions[index]

    def __iter__(self) -> Iterator[FiniteFunction]:
        return iter(self._functions)

    def check_index(self, index: int) -> int:
        if not 0 <= index < len(self._functions):
            raise InvalidArgumentError(f"Member index {index} out of range for a family of {len(self)}")
        return index

    def index_of(self, function: FiniteFunction) -> int:
        try:
            return self._index[function.values]
        except KeyError:
            raise InvalidArgumentError(f"Function {function.values} is not a member of the family") from None

    def words(self) -> List[str]:
        return [f.word(self._alphabet) for f in self._functions]

    def disagreement_masks(self, index: int) -> List[int]:
        """Per member g, the mask of domain positions where g differs from member `index`."""
        self.check_index(index)
        return row_masks(self._values != self._values[index])

    def blockers(self, index: int) -> Tuple[int, ...]:
        """
        Inclusion-minimal disagreement masks with the members g where not f <= g.

        S is Occam for f exactly when S meets every blocker of f.
        """
        if index not in self._blockers:
            self.check_index(index)
            masks = self.disagreement_masks(index)
            above = self._leq[index]
            self._blockers[index] = minimal_masks(m for g, m in enumerate(masks) if not above[g])
        return self._blockers[index]

    def cache_blockers(self) -> "FunctionFamily":
        """Fill the blocker cache for every member; the family is then safe to share across threads."""
        for index in range(len(self)):
            self.blockers(index)
        return self

    def reordered(self, permutation: Sequence[int]) -> "FunctionFamily":
        """The same poset with members listed as [old permutation[0], old permutation[1], ...]."""
        if sorted(permutation) != list(range(len(self))):
            raise InvalidArgumentError("Not a permutation of the family's members")
        return FunctionFamily(
            [self._functions[i] for i in permutation],
            self._order.reindexed(permutation),
            self._alphabet,
            self._domain_labels,
        )

    def subfamily(self, indices: Sequence[int]) -> "FunctionFamily":
        """The induced subposet on the given members."""
        for i in indices:
            self.check_index(i)
        return FunctionFamily(
            [self._functions[i] for i in indices],
            self._order.reindexed(indices),
            self._alphabet,
            self._domain_labels,
        )

    def __repr__(self) -> str:
        return (
            f"FunctionFamily({len(self)} functions, domain {self._domain_size}, "
            f"codomain {self._codomain_size}, order {self._order.name})"
        )
