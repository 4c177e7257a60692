import numpy as np

from src.orders.base_order import BaseOrder


class PointwiseOrder(BaseOrder):
    """f <= g iff f(x) <= g(x) for every x; inclusion of supports on 0/1 families."""

    name = "pointwise"

    def relation(self, values: np.ndarray) -> np.ndarray:
        return np.all(values[:, None, :] <= values[None, :, :], axis=2)
