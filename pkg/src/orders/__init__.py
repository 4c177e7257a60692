from src.orders.base_order import BaseOrder
from src.orders.equality import EqualityOrder
from src.orders.pointwise import PointwiseOrder
from src.orders.explicit import ExplicitOrder

__all__ = ["BaseOrder", "EqualityOrder", "PointwiseOrder", "ExplicitOrder"]
