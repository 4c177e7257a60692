import logging
from typing import Iterable, List, Sequence, Tuple
import numpy as np

from src.exceptions import InvalidArgumentError
from src.orders.base_order import BaseOrder

logger = logging.getLogger(__name__)


def _transitive_closure(matrix: np.ndarray) -> np.ndarray:
    closure = matrix.copy()
    for k in range(closure.shape[0]):
        closure |= closure[:, k:k + 1] & closure[k:k + 1, :]
    return closure


class ExplicitOrder(BaseOrder):
    """A partial order given as a boolean matrix over family indices."""

    name = "explicit"

    def __init__(self, matrix: np.ndarray):
        matrix = np.array(matrix, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidArgumentError(f"Order relation must be a square matrix, got shape {matrix.shape}")
        if not matrix.diagonal().all():
            raise InvalidArgumentError("Order relation is not reflexive")
        off_diagonal = matrix & matrix.T & ~np.eye(matrix.shape[0], dtype=bool)
        if off_diagonal.any():
            i, j = np.argwhere(off_diagonal)[0]
            raise InvalidArgumentError(f"Order relation is not antisymmetric: {i} <= {j} <= {i}")
        if (_transitive_closure(matrix) & ~matrix).any():
            raise InvalidArgumentError("Order relation is not transitive")
        self.matrix = matrix
        self.matrix.setflags(write=False)

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]], size: int) -> "ExplicitOrder":
        """Reflexive-transitive closure of the given (lower, upper) pairs."""
        matrix = np.eye(size, dtype=bool)
        for lower, upper in pairs:
            if not (0 <= lower < size and 0 <= upper < size):
                raise InvalidArgumentError(f"Pair ({lower}, {upper}) outside a family of {size} members")
            matrix[lower, upper] = True
        return cls(_transitive_closure(matrix))

    def relation(self, values: np.ndarray) -> np.ndarray:
        if values.shape[0] != self.matrix.shape[0]:
            raise InvalidArgumentError(
                f"Order relation covers {self.matrix.shape[0]} members but the family has {values.shape[0]}"
            )
        return self.matrix

    def describe(self) -> List[List[int]]:
        return [[int(i), int(j)] for i, j in np.argwhere(self.matrix) if i != j]

    def reindexed(self, permutation: Sequence[int]) -> "ExplicitOrder":
        index = np.asarray(permutation)
        return ExplicitOrder(self.matrix[np.ix_(index, index)])
