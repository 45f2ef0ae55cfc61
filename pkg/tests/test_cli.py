import json

import pytest

from wfano.cli import main


def test_check_extreme_tuple(capsys):
    assert main(["check", "407,547,5311,12528,18792", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["quasi_smooth"] is True
    assert out["well_formed"] is True
    # the vertex monomials of the census table
    assert set(out["vertex_witnesses"]) == {
        "x_0^91*x_1", "x_1^59*x_2", "x_2^7*x_0", "x_3^3", "x_4^2"}
    assert out["series"] is None


def test_check_smooth_quintic(capsys):
    assert main(["check", "1,1,1,1,1", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["quasi_smooth"] and out["terminal"]
    assert out["basket"] == []


def test_check_failing_vertex(capsys):
    assert main(["check", "2,3,4,5,7", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["quasi_smooth"] is False
    assert out["failing_subset"] == [4]


def test_check_parse_error(capsys):
    assert main(["check", "2,x,4"]) == 1


def test_series_enumerate(capsys):
    assert main(["series", "enumerate"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l.strip()]
    assert len(lines) == 48
    assert json.loads(lines[0]) == {"b": [1, 1, 1]}


def test_cy_command(capsys):
    assert main(["cy", "--dim", "2", "--max-weight", "4"]) == 0
    out = capsys.readouterr().out.splitlines()
    recs = [json.loads(l) for l in out if l.strip()]
    assert [r["weights"] for r in recs] == [[1, 1, 1], [1, 1, 2], [1, 2, 3]]


def test_brute_and_diff_roundtrip(tmp_path, capsys):
    census = tmp_path / "box.jsonl"
    summary = tmp_path / "box.json"
    rc = main(["search", "brute", "--threads", "1",
               "--bounds", "3,3,3,3,3",
               "--output", str(census), "--summary", str(summary)])
    assert rc == 0
    caught = json.load(open(summary))
    assert caught["quasi_smooth"] == 8
    assert main(["diff", str(census), str(census)]) == 0
    capsys.readouterr()
    # drop one record: mismatch exit code
    lines = census.read_text().splitlines()
    short = tmp_path / "short.jsonl"
    short.write_text("\n".join(lines[1:]) + "\n")
    assert main(["diff", str(census), str(short)]) == 3
    out = json.loads(capsys.readouterr().out)
    assert out["only_in_a_count"] == 1


def test_brute_compare_flag(tmp_path, capsys):
    census = tmp_path / "box5.jsonl"
    rc = main(["search", "brute", "--threads", "1", "--bounds", "5,5,5,5,5",
               "--output", str(census)])
    assert rc == 0
    rc = main(["search", "brute", "--threads", "1", "--bounds", "5,5,5,5,5",
               "--output", str(tmp_path / "again.jsonl"),
               "--compare", str(census)])
    assert rc == 0
    capsys.readouterr()


def test_classify_command(tmp_path, capsys):
    census = tmp_path / "in.jsonl"
    main(["search", "brute", "--threads", "1", "--bounds", "4,4,4,4,4",
          "--output", str(census)])
    capsys.readouterr()
    rc = main(["classify", "--input", str(census),
               "--output", str(tmp_path / "out.jsonl")])
    assert rc == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["records"] == summary["quasi_smooth"]
    assert summary["terminal"] <= summary["records"]


def test_usage_error_exit_code():
    assert main(["search"]) == 1
    assert main(["nonsense"]) == 1


def test_no_prune_matches(tmp_path):
    a = tmp_path / "a.jsonl"
    b = tmp_path / "b.jsonl"
    assert main(["search", "brute", "--threads", "1", "--bounds",
                 "4,4,4,4,4", "--output", str(a)]) == 0
    assert main(["search", "brute", "--bounds", "4,4,4,4,4", "--no-prune",
                 "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
