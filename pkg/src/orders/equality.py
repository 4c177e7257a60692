import numpy as np

from src.orders.base_order import BaseOrder


class EqualityOrder(BaseOrder):
    """f <= g iff f = g; every Occam question becomes a uniqueness question."""

    name = "equality"

    def relation(self, values: np.ndarray) -> np.ndarray:
        return np.eye(values.shape[0], dtype=bool)
