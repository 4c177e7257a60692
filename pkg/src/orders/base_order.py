from abc import ABC, abstractmethod
from typing import List, Sequence, Union
import numpy as np


class BaseOrder(ABC):
    name: str = ""

    @abstractmethod
    def relation(self, values: np.ndarray) -> np.ndarray:
        """
        Build the order relation of a family.

        Args:
            values: (members x domain) integer matrix, one row per function

        Returns:
            np.ndarray: boolean matrix with leq[i, j] true iff member i <= member j
        """
        pass

    def describe(self) -> Union[str, List[List[int]]]:
        """Serialisable form used by the family file format."""
        return self.name

    def reindexed(self, permutation: Sequence[int]) -> "BaseOrder":
        """The same order after members are reordered so that new i = old permutation[i]."""
        return self
