import pandas as pd
import pytest
from hypothesis import given, settings, strategies as st

from src.config.catalog import CATALOG, PUBLISHED_FUSION
from src.exceptions import InvalidArgumentError
from src.groups import (
    characteristic_family,
    f0_via_rank,
    fusion_sequence_group,
    group_fusion_set,
    make_group,
    periodicity_probe,
    subgroups,
)
from src.groups.census import census, census_specs
from src.groups.fusion import JoinTable, all_fusion_masks, shortest_period
from src.poset import FusionStatus, fusion_number, fusion_sequence, fusion_set, maximum
from src.poset.subsets import SubsetMask, iter_bits, sweep_order

SMALL = [spec for spec in CATALOG if make_group(spec).order <= 8]
UP_TO_SIXTEEN = [spec for spec in CATALOG if make_group(spec).order <= 16]
PUBLISHED_ROWS = sorted(PUBLISHED_FUSION.items())


class TestGroupFusionSets:
    @pytest.mark.parametrize("spec", SMALL)
    def test_generated_subgroups_are_the_fusion_set(self, spec):
        g = make_group(spec)
        family = characteristic_family(g, "pointwise")
        masks = subgroups(g)
        joins = JoinTable(g)
        for bits in range(1 << g.order):
            s = SubsetMask(bits, g.order)
            expected = {masks[i].bits for i in fusion_set(family, s)}
            assert {h.bits for h in group_fusion_set(g, s, "sweep")} == expected
            assert {h.bits for h in group_fusion_set(g, s, "fixpoint", joins)} == expected

    @pytest.mark.parametrize("spec", ["Z4", "S3", "Q8", "Z2xZ4"])
    def test_join_table_sweep_matches_fusion_sets(self, spec):
        g = make_group(spec)
        family = characteristic_family(g, "pointwise")
        swept = all_fusion_masks(JoinTable(g))
        for s, members in zip(sweep_order(g.order).tolist(), swept):
            assert set(iter_bits(members)) == fusion_set(family, SubsetMask(s, g.order))

    @settings(max_examples=15, deadline=None)
    @given(spec=st.sampled_from(["Dic3", "A4", "D6", "Z2xZ6", "Z16"]), data=st.data())
    def test_sweep_and_fixpoint_agree_on_large_subsets(self, spec, data):
        g = make_group(spec)
        size = data.draw(st.integers(9, 12))
        elements = data.draw(st.lists(st.integers(0, g.order - 1), min_size=size, max_size=size, unique=True))
        s = SubsetMask.from_indices(elements, g.order)
        swept = group_fusion_set(g, s, "sweep")
        assert group_fusion_set(g, s, "fixpoint") == swept
        masks = subgroups(g)
        family = characteristic_family(g, "pointwise")
        assert {masks[i].bits for i in fusion_set(family, s)} == {h.bits for h in swept}

    def test_empty_set_gives_identity(self):
        g = make_group("D4")
        assert group_fusion_set(g, 0) == {g.trivial_subgroup()}

    def test_unknown_method(self):
        with pytest.raises(InvalidArgumentError):
            group_fusion_set(make_group("Z4"), 1, "guess")

    def test_join_with_generator(self):
        g = make_group("Z6")
        joins = JoinTable(g)
        whole = joins.position[g.whole().bits]
        assert joins.joins[joins.trivial][1] == whole


class TestFusionSequences:
    @pytest.mark.parametrize("spec", UP_TO_SIXTEEN)
    def test_first_term_is_two_to_the_rank(self, spec):
        g = make_group(spec)
        family = characteristic_family(g, "pointwise")
        assert fusion_number(family, maximum(family), 1 << 16).value == f0_via_rank(g)

    @pytest.mark.parametrize("spec, published", PUBLISHED_ROWS)
    def test_published_rows(self, spec, published):
        last = max(i for i, value in enumerate(published) if value is not None)
        report = fusion_sequence_group(make_group(spec), last)
        assert report.values() == list(published[: last + 1])
        assert not report.exceeded
        assert report.disagreements() == []

    def test_d4_at_default_budget(self):
        report = fusion_sequence_group(make_group("D4"), 3)
        assert report.values()[:3] == [4, 64, 2]
        assert report.terms[3].status is FusionStatus.BUDGET_EXCEEDED
        assert report.to_row()["F3"] == "?"

    @settings(max_examples=10, deadline=None)
    @given(permutation=st.permutations(range(4)))
    def test_member_order_does_not_matter(self, permutation):
        family = characteristic_family(make_group("Z6"), "pointwise")
        terms = fusion_sequence(family.reordered(permutation), 3)
        assert [t.value for t in terms] == [2, 4, 4, 8]

    def test_d4_runs_over_budget(self):
        report = fusion_sequence_group(make_group("D4"), 3, budget=1 << 12)
        assert report.values()[:2] == [4, 64]
        assert [t.status for t in report.terms[2:]] == [FusionStatus.BUDGET_EXCEEDED] * 2
        assert report.exceeded
        assert report.to_row() == {"group": "D4", "F0": 4, "F1": 64, "F2": "?", "F3": "?"}

    def test_rank_stands_in_for_first_term(self):
        report = fusion_sequence_group(make_group("Z4"), 1, budget=4)
        assert report.terms[0].value == 2
        assert report.terms[1].status is FusionStatus.BUDGET_EXCEEDED

    def test_record(self):
        record = fusion_sequence_group(make_group("Z2"), 1).to_record()
        assert record["group"] == "Z2"
        assert record["terms"][1] == {"index": 1, "value": 2, "status": "computed"}


class TestPeriodicity:
    @pytest.mark.parametrize(
        "prefix, period",
        [
            ((2, 4, 2, 4), 2),
            ((2, 2, 2, 2), 1),
            ((2, 4, 4, 8), None),
            ((2,), None),
            ((), None),
            ((2, 8, 2), None),
            ((2, 8, 2, 8, 2), 2),
        ],
    )
    def test_shortest_period(self, prefix, period):
        assert shortest_period(prefix) == period

    @pytest.mark.parametrize("spec, period", [("Z4", 2), ("Z7", 1), ("Z8", 2)])
    def test_probe(self, spec, period):
        probe = periodicity_probe(make_group(spec), 3)
        assert len(probe.prefix) == 4
        assert probe.period == period


class TestCensus:
    def test_orders_up_to_eight(self):
        frame = census(8, terms=1)
        assert len(frame) == 12
        assert {"Z8", "Q8", "Z2xZ4", "D4"} <= set(frame["group"])
        assert "Z1" not in set(frame["group"])
        assert frame.loc[frame["group"] == "D4", "occ"].item() == 5

    def test_trivial_group_alone(self):
        frame = census(1, terms=1)
        assert frame["group"].tolist() == ["Z1"]
        assert frame["occ"].item() == 0
        assert frame["F0"].item() == 1

    def test_z6_discrepancy_is_flagged(self):
        frame = census(6, terms=1)
        row = frame.set_index("group").loc["Z6"]
        assert row["occ"] == 2
        assert row["published_occ"] == 1
        assert row["occ_discrepancy"]
        assert not frame.set_index("group").loc["S3", "occ_discrepancy"]

    def test_dicyclic_row(self):
        specs = census_specs(12)
        assert "Dic3" in specs
        frame = census(12, terms=1, specs=["Dic3", "A4"])
        assert frame.set_index("group").loc["Dic3", "occ"] == 2

    def test_threads_do_not_change_the_frame(self):
        pd.testing.assert_frame_equal(census(6, terms=1, threads=1), census(6, terms=1, threads=3))

    def test_status_columns(self):
        frame = census(4, terms=2)
        assert {"F0", "F0_status", "F2", "F2_status"} <= set(frame.columns)
        assert str(frame["F0"].dtype) == "Int64"

    @pytest.mark.parametrize("max_order", [0, 1000])
    def test_bad_max_order(self, max_order):
        with pytest.raises(InvalidArgumentError):
            census(max_order)
