from itertools import combinations

import pytest
from hypothesis import assume, given, settings, strategies as st

from src.exceptions import InvalidArgumentError, OccOverflowError
from src.occ import (
    OccInstance,
    best_construction,
    construct_3n2,
    construct_m22,
    construct_mn1,
    exact_occ,
    full_function_space,
    single_function,
    theorem_upper_bound,
    verify_family_radius,
)
from src.occ.bounds import brute_force_upper_bound, enumerate_bound_vectors
from src.occ.constructions import construction_size
from src.occ.search import HereditarySearch
from src.orders import PointwiseOrder
from src.poset import FunctionFamily
from tests.conftest import EXAMPLE_WORDS


@st.composite
def small_instances(draw, limit=12):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(1, 5))
    r = draw(st.integers(0, m))
    assume(n ** r <= limit and n ** (m - r) <= limit)
    return OccInstance(m, n, r)


class TestUpperBound:
    @pytest.mark.parametrize("n, expected", [(2, 6), (3, 15), (4, 31), (5, 53)])
    def test_three_position_radius_two(self, n, expected):
        assert theorem_upper_bound(OccInstance(3, n, 2)).p == expected

    @pytest.mark.parametrize(
        "m, n, r, expected",
        [(2, 2, 1, 2), (3, 2, 1, 3), (2, 3, 1, 4), (4, 2, 2, 10), (3, 2, 0, 1), (3, 2, 3, 8)],
    )
    def test_small_values(self, m, n, r, expected):
        assert theorem_upper_bound(OccInstance(m, n, r)).p == expected

    def test_witness_vector(self):
        witness = theorem_upper_bound(OccInstance(3, 2, 2))
        assert witness.x == [2, 2]
        assert witness.to_document() == {"p": 6, "x": [2, 2]}

    @settings(max_examples=200, deadline=None)
    @given(inst=small_instances())
    def test_closed_form_matches_brute_force(self, inst):
        assert theorem_upper_bound(inst).p == brute_force_upper_bound(inst)

    @settings(max_examples=200, deadline=None)
    @given(inst=small_instances(limit=4))
    def test_closed_form_matches_enumeration(self, inst):
        assert theorem_upper_bound(inst).p == enumerate_bound_vectors(inst)

    @settings(max_examples=200, deadline=None)
    @given(inst=small_instances())
    def test_witness_satisfies_constraints(self, inst):
        witness = theorem_upper_bound(inst)
        assert witness.satisfies(inst)
        assert sum(witness.x) <= inst.n ** inst.r
        assert sum(i * c for i, c in enumerate(witness.x, start=1)) == witness.p

    def test_long_witness_is_sparse(self):
        document = theorem_upper_bound(OccInstance(9, 4, 2)).to_document()
        assert "x" not in document
        assert document["x_length"] == 4 ** 7
        assert sum(int(size) * count for size, count in document["x_nonzero"].items()) == document["p"]

    def test_overflow(self):
        with pytest.raises(OccOverflowError):
            theorem_upper_bound(OccInstance(64, 2, 1))

    @pytest.mark.parametrize("m, n, r", [(0, 2, 0), (2, 0, 1), (2, 2, 3), (2, 2, -1)])
    def test_invalid_instances(self, m, n, r):
        with pytest.raises(InvalidArgumentError):
            OccInstance(m, n, r)


class TestConstructions:
    def test_two_letters_gives_the_example_family(self):
        assert sorted(construct_3n2(2).words()) == sorted(EXAMPLE_WORDS)

    @pytest.mark.parametrize("n, size", [(2, 6), (3, 15), (4, 28)])
    def test_3n2_sizes(self, n, size):
        family = construct_3n2(n)
        assert len(family) == size == construction_size("construct_3n2", OccInstance(3, n, 2))
        assert verify_family_radius(family, 2)

    def test_m22_small(self):
        assert construct_m22(2).words() == ["aa", "ab", "ba", "bb"]
        assert set(construct_m22(3).words()) == {"aaa", "aba", "abb", "bbb", "bab", "baa"}

    def test_m22_five_positions(self):
        family = construct_m22(5)
        assert set(family.words()) == {
            "aaaaa", "abaaa", "abbaa", "abbba", "abbbb",
            "bbbbb", "babbb", "baabb", "baaab", "baaaa",
        }
        assert verify_family_radius(family, 2)

    def test_mn1(self):
        assert set(construct_mn1(3, 2).words()) == {"baa", "aba", "aab"}
        family = construct_mn1(2, 3)
        assert len(family) == 4
        assert verify_family_radius(family, 1)

    def test_mn1_needs_two_letters(self):
        with pytest.raises(InvalidArgumentError):
            construct_mn1(3, 1)

    def test_example_family_radius_bounds(self):
        family = FunctionFamily.from_words(EXAMPLE_WORDS, "ab")
        assert verify_family_radius(family, 2)
        assert not verify_family_radius(family, 1)

    def test_radius_check_needs_equality(self):
        family = FunctionFamily.from_words(["ab", "bb"], "ab", PointwiseOrder())
        with pytest.raises(InvalidArgumentError):
            verify_family_radius(family, 1)

    def test_full_space_and_single(self):
        assert len(full_function_space(3, 2)) == 8
        assert single_function(4, 3).words() == ["aaaa"]

    def test_full_space_cap(self):
        with pytest.raises(InvalidArgumentError):
            full_function_space(13, 2)

    def test_constructions_are_hereditary(self):
        family = construct_3n2(3)
        for drop in combinations(range(len(family)), 2):
            keep = [i for i in range(len(family)) if i not in drop]
            assert verify_family_radius(family.subfamily(keep), 2)

    @pytest.mark.parametrize(
        "m, n, r, name, size",
        [
            (3, 3, 2, "construct_3n2", 15),
            (2, 2, 2, "full_function_space", 4),
            (5, 2, 2, "construct_m22", 10),
            (4, 3, 1, "construct_mn1", 8),
            (3, 3, 0, "single_function", 1),
        ],
    )
    def test_best_construction(self, m, n, r, name, size):
        chosen, family = best_construction(OccInstance(m, n, r))
        assert chosen == name
        assert len(family) == size


class TestExactOcc:
    def test_search_proves_three_two_two(self):
        certificate = exact_occ(OccInstance(3, 2, 2), force_search=True)
        assert certificate.exact == 6
        assert certificate.method == "search"
        assert certificate.nodes > 0

    def test_bounds_meet(self):
        certificate = exact_occ(OccInstance(3, 3, 2))
        assert certificate.exact == 15
        assert certificate.method == "bounds"
        assert certificate.construction == "construct_3n2"

    def test_interval_left_open(self):
        certificate = exact_occ(OccInstance(3, 4, 2))
        assert (certificate.lower, certificate.upper) == (28, 31)
        assert certificate.exact is None
        assert certificate.method == "interval"
        assert "exact" not in certificate.to_document()

    def test_search_closes_a_gap(self):
        certificate = exact_occ(OccInstance(4, 2, 2))
        assert certificate.method == "search"
        assert 8 <= certificate.exact <= 10
        assert len(certificate.witness_family) == certificate.exact
        assert verify_family_radius(certificate.witness_family, 2)
        assert not certificate.search_exhausted

    def test_radius_one_on_two_positions(self):
        certificate = exact_occ(OccInstance(2, 2, 1), force_search=True)
        assert certificate.exact == 2
        assert certificate.method == "search"

    def test_small_budget_leaves_an_interval(self):
        certificate = exact_occ(OccInstance(4, 2, 2), budget=1 << 15)
        assert (certificate.lower, certificate.upper) == (8, 10)
        assert certificate.exact is None
        assert certificate.method == "interval"
        assert certificate.construction == "construct_m22"
        assert not certificate.search_exhausted

    def test_search_runs_out_of_nodes(self):
        search = HereditarySearch(OccInstance(2, 2, 1), 0, 2, budget=1)
        assert not search.run()
        assert search.nodes == 2
        assert search.best_family() is None

    def test_stopped_search_is_flagged(self, monkeypatch):
        monkeypatch.setattr(HereditarySearch, "run", lambda self: False)
        certificate = exact_occ(OccInstance(4, 2, 2))
        assert certificate.search_exhausted
        assert certificate.exact is None
        assert certificate.method == "interval"
        assert (certificate.lower, certificate.upper) == (8, 10)
        assert certificate.to_document()["search_exhausted"] is True

    def test_document(self):
        document = exact_occ(OccInstance(3, 2, 2)).to_document()
        assert document["exact"] == 6
        assert document["witness_x"] == {"p": 6, "x": [2, 2]}
        assert sorted(document["witness_family"]["functions"]) == sorted(EXAMPLE_WORDS)
        assert document["witness_family"]["order"] == "equality"
