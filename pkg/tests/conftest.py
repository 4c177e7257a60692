import pytest
from hypothesis import strategies as st

from src.config.search_configs import SEARCH_CONFIGS
from src.groups import characteristic_family, make_group
from src.orders import EqualityOrder, PointwiseOrder
from src.poset import FiniteFunction, FunctionFamily

EXAMPLE_WORDS = ["aba", "bab", "aab", "bba", "aaa", "bbb"]


@pytest.fixture(autouse=True)
def log_dir(tmp_path, monkeypatch):
    path = tmp_path / "logs"
    monkeypatch.setitem(SEARCH_CONFIGS["cli"], "log_dir", str(path))
    return path


@pytest.fixture
def example_family():
    return FunctionFamily.from_words(EXAMPLE_WORDS, ["a", "b"])


@pytest.fixture
def z4_inclusion():
    return characteristic_family(make_group("Z4"), "pointwise")


@st.composite
def families(draw, max_domain=5, max_members=8, orders=("equality", "pointwise")):
    """Random families of distinct functions over a small domain."""
    domain = draw(st.integers(1, max_domain))
    codomain = draw(st.integers(2, 3))
    rows = draw(
        st.lists(
            st.tuples(*[st.integers(0, codomain - 1)] * domain),
            min_size=1,
            max_size=max_members,
            unique=True,
        )
    )
    order = EqualityOrder() if draw(st.sampled_from(orders)) == "equality" else PointwiseOrder()
    return FunctionFamily([FiniteFunction(row, codomain) for row in rows], order)
