import json

import pytest

from src.utils.occam_cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, build_parser, main, parse_group_spec
from src.exceptions import UsageError
from src.occ.search import HereditarySearch


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestOcc:
    @pytest.mark.parametrize("n, p", [(2, 6), (3, 15), (4, 31), (5, 53)])
    def test_bound(self, capsys, n, p):
        code, out, _ = run(capsys, "occ-bound", "--m", "3", "--n", str(n), "--r", "2", "--format", "json")
        assert code == EXIT_OK
        document = json.loads(out)
        assert document["p"] == p
        assert (document["m"], document["n"], document["r"]) == (3, n, 2)

    def test_bound_as_text(self, capsys):
        code, out, _ = run(capsys, "occ-bound", "--m", "3", "--n", "2", "--r", "2")
        assert code == EXIT_OK
        assert "p: 6\n" in out
        assert "x: 2 2\n" in out

    def test_construct(self, capsys):
        code, out, _ = run(capsys, "occ-construct", "--m", "3", "--n", "4", "--r", "2", "--format", "json")
        document = json.loads(out)
        assert code == EXIT_OK
        assert document["construction"] == "construct_3n2"
        assert document["size"] == len(document["family"]["functions"]) == 28

    def test_exact(self, capsys):
        code, out, _ = run(capsys, "occ-exact", "--m", "3", "--n", "3", "--r", "2", "--format", "json")
        document = json.loads(out)
        assert code == EXIT_OK
        assert document["exact"] == 15
        assert document["method"] == "bounds"

    def test_open_interval(self, capsys):
        code, out, _ = run(capsys, "occ-exact", "--m", "3", "--n", "4", "--r", "2", "--format", "csv")
        assert code == EXIT_OK
        header, row = out.splitlines()
        values = dict(zip(header.split(","), row.split(",")))
        assert (values["lower"], values["upper"], values["method"]) == ("28", "31", "interval")

    def test_overflow_is_a_usage_error(self, capsys):
        code, _, err = run(capsys, "occ-bound", "--m", "64", "--n", "2", "--r", "1")
        assert code == EXIT_USAGE
        assert "does not fit" in err

    def test_stopped_search_exits_with_budget_code(self, capsys, monkeypatch):
        monkeypatch.setattr(HereditarySearch, "run", lambda self: False)
        code, out, _ = run(capsys, "occ-exact", "--m", "4", "--n", "2", "--r", "2", "--format", "json")
        assert code == EXIT_BUDGET
        document = json.loads(out)
        assert document["search_exhausted"] is True
        assert document["method"] == "interval"


class TestGroups:
    def test_radius_of_one_subgroup(self, capsys):
        code, out, _ = run(capsys, "group-radius", "--group", "D4", "--subgroup", "e,r^2", "--format", "json")
        assert code == EXIT_OK
        [row] = json.loads(out)
        assert row["chi"] == "10100000"
        assert row["radius"] == 4

    def test_radius_table(self, capsys):
        code, out, _ = run(capsys, "group-radius", "--group", "D4", "--format", "csv")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "chi,radius,witness"
        assert len(lines) == 11

    def test_subgroup_as_bitstring(self, capsys):
        code, out, _ = run(capsys, "group-radius", "--group", "Z4", "--subgroup", "1010", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)[0]["chi"] == "1010"

    def test_not_a_subgroup(self, capsys):
        code, _, err = run(capsys, "group-radius", "--group", "D4", "--subgroup", "e,r")
        assert code == EXIT_USAGE
        assert "not a subgroup" in err

    def test_occ_flags_z6(self, capsys):
        code, out, _ = run(capsys, "group-occ", "--group", "Z6", "--format", "json")
        assert code == EXIT_OK
        [row] = json.loads(out)
        assert row["occ"] == row["occ_hitting"] == 2
        assert row["published_occ"] == 1
        assert row["occ_discrepancy"] is True

    def test_occ_of_unpublished_group(self, capsys):
        code, out, _ = run(capsys, "group-occ", "--group", "Z2xZ2xZ2", "--format", "json")
        assert code == EXIT_OK
        [row] = json.loads(out)
        assert row["occ"] == 7
        assert row["published_occ"] is None
        assert row["occ_discrepancy"] is False

    def test_fusion(self, capsys):
        code, out, _ = run(capsys, "group-fusion", "--group", "Z4", "--terms", "3", "--format", "json")
        assert code == EXIT_OK
        [row] = json.loads(out)
        assert [row[f"F{i}"] for i in range(4)] == [2, 4, 2, 4]

    def test_fusion_over_budget(self, capsys):
        code, out, _ = run(capsys, "group-fusion", "--group", "D4", "--terms", "3", "--budget", "12")
        assert code == EXIT_BUDGET
        assert out.splitlines()[1].split() == ["D4", "4", "64", "?", "?"]

    def test_fusion_at_default_budget(self, capsys):
        code, out, _ = run(capsys, "group-fusion", "--group", "D4", "--terms", "3")
        assert code == EXIT_BUDGET
        assert out.splitlines()[1].split() == ["D4", "4", "64", "2", "?"]

    @pytest.mark.parametrize("command", ["group-radius", "census"])
    def test_output_does_not_depend_on_threads(self, capsys, command):
        argv = {
            "group-radius": ["group-radius", "--group", "A4", "--format", "csv"],
            "census": ["census", "--max-order", "8", "--terms", "2", "--format", "json"],
        }[command]
        outputs = []
        for threads in ("1", "4", "8"):
            code, out, _ = run(capsys, *argv, "--threads", threads)
            assert code == EXIT_OK
            outputs.append(out)
        assert outputs[0] == outputs[1] == outputs[2]

    @pytest.mark.parametrize(
        "argv",
        [
            ["census", "--max-order", "6", "--terms", "1"],
            ["group-occ", "--group", "D4"],
            ["occ-exact", "--m", "3", "--n", "2", "--r", "2"],
        ],
    )
    def test_json_is_canonical(self, capsys, argv):
        _, out, _ = run(capsys, *argv, "--format", "json")
        assert json.dumps(json.loads(out), indent=2, sort_keys=True) + "\n" == out

    def test_fusion_probe(self, capsys):
        code, out, _ = run(capsys, "group-fusion", "--group", "Z8", "--probe", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out)[0]["period"] == 2

    def test_bad_group(self, capsys):
        code, _, err = run(capsys, "group-occ", "--group", "Z2xQ9")
        assert code == EXIT_USAGE
        assert "Z2xQ9" in err

    def test_parse_group_spec(self):
        assert parse_group_spec("Dic3").order == 12
        with pytest.raises(UsageError):
            parse_group_spec("X")


class TestPosets:
    def test_radius(self, capsys):
        code, out, _ = run(capsys, "poset-radius", "--family", "data/families/two_letter_radius2.json", "--format", "csv")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "member,function,radius,witness"
        assert [line.split(",")[2] for line in lines[1:]] == ["2"] * 6

    def test_single_member(self, capsys):
        code, out, _ = run(capsys, "poset-radius", "--family", "three_chain.json", "--member", "1", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out) == [{"member": 1, "function": "ab", "radius": 1, "witness": "01"}]

    def test_member_out_of_range(self, capsys):
        code, _, _ = run(capsys, "poset-radius", "--family", "three_chain.json", "--member", "7")
        assert code == EXIT_USAGE

    def test_fusion(self, capsys):
        code, out, _ = run(capsys, "poset-fusion", "--family", "z4_subgroups.json", "--terms", "2", "--format", "json")
        assert code == EXIT_OK
        [row] = json.loads(out)
        assert row["family"] == "z4_subgroups"
        assert [row["F0"], row["F1"], row["F2"]] == [2, 4, 2]

    def test_fusion_without_maximum(self, capsys):
        code, out, _ = run(capsys, "poset-fusion", "--family", "two_letter_radius2.json", "--terms", "1")
        assert code == EXIT_OK
        assert out.splitlines()[1].split()[1] == "-"

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "poset-fusion", "--family", "nowhere.json")
        assert code == EXIT_USAGE
        assert "nowhere.json" in err


class TestCensus:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "census", "--max-order", "4", "--terms", "1", "--format", "csv")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert [line.split(",")[0] for line in lines[1:]] == ["Z2", "Z3", "Z4", "Z2xZ2"]

    def test_collisions(self, capsys):
        code, out, _ = run(capsys, "census", "--max-order", "8", "--collisions", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(out) == []

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "tables" / "census.csv"
        code, out, _ = run(capsys, "census", "--max-order", "3", "--terms", "1", "--format", "csv", "--out", str(path))
        assert code == EXIT_OK
        assert out == ""
        assert path.read_text(encoding="utf-8").startswith("group,order,rank,occ")


class TestUsage:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["fly"],
            ["occ-bound", "--m", "3"],
            ["occ-bound", "--m", "3", "--n", "2", "--r", "5"],
            ["group-fusion"],
            ["poset-radius"],
            ["census", "--budget", "70"],
            ["census", "--threads", "0"],
            ["group-fusion", "--group", "Z4", "--terms", "0"],
            ["census", "--format", "xml"],
            ["occ-bound", "--m", "three", "--n", "2", "--r", "1"],
            ["census", "--max-order", "0"],
        ],
    )
    def test_exit_code(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == EXIT_USAGE
        assert out == ""
        assert "occam: error:" in err

    def test_log_directory_is_created(self, capsys, log_dir):
        run(capsys, "occ-bound", "--m", "2", "--n", "2", "--r", "1")
        assert log_dir.is_dir()

    def test_parser_defaults(self):
        args = build_parser().parse_args(["census"])
        assert (args.budget, args.threads, args.format, args.terms) == (22, 1, "text", 3)
