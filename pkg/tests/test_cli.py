import json

import pytest

from gnctrees import formulas
from gnctrees.cli import main
from gnctrees.trees import tree_to_json


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_count_methods_agree(capsys):
    classes = ["", "u", "h", "d", "h,d", "uu,h", "dd,h", "ud,h", "du,h", "uu,dd,h"]
    for avoid in classes:
        for n in range(6):
            values = {}
            for method in ("brute", "formula", "series"):
                rc, out, _ = run(
                    capsys, ["count", "--n", str(n), "--avoid", avoid, "--method", method]
                )
                assert rc == 0
                values[method] = int(out)
            assert len(set(values.values())) == 1, (avoid, n, values)


def test_count_published_values(capsys):
    rc, out, _ = run(capsys, ["count", "--n", "4", "--avoid", "h", "--method", "formula"])
    assert rc == 0 and out.strip() == "217"
    rc, out, _ = run(capsys, ["count", "--n", "3", "--avoid", "h,d", "--method", "series"])
    assert rc == 0 and out.strip() == "11"
    rc, out, _ = run(capsys, ["count", "--n", "2", "--avoid", "", "--method", "brute"])
    assert rc == 0 and out.strip() == "12"


def test_count_series_supports_uudd_pair(capsys):
    rc, out, _ = run(capsys, ["count", "--n", "5", "--avoid", "uu,dd", "--method", "series"])
    assert rc == 0
    rc2, out2, _ = run(capsys, ["count", "--n", "5", "--avoid", "uu,dd", "--method", "brute"])
    assert out == out2


def test_count_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "3", "--avoid", "uu,dd", "--method", "formula"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--n", "3", "--avoid", "uu,du", "--method", "series"])
    assert exc.value.code == 2


def test_count_bound_error(capsys):
    rc, _, err = run(capsys, ["count", "--n", "8", "--method", "brute"])
    assert rc == 1
    assert "max-n" in err


def test_census_csv(capsys):
    rc, out, _ = run(capsys, ["census", "--n", "2"])
    assert rc == 0
    assert out.splitlines() == [
        "u,h,d,count",
        "0,2,0,3",
        "1,0,1,2",
        "1,1,0,4",
        "2,0,0,3",
    ]


def test_census_json_and_star(capsys):
    rc, out, _ = run(capsys, ["census", "--n", "1", "--star", "--format", "json"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["rows"] == [{"count": 1, "d": 0, "h": 0, "u": 1}]
    assert payload["total"] == 1
    rc, out, _ = run(capsys, ["census", "--n", "0", "--format", "json"])
    assert json.loads(out)["rows"] == [{"count": 1, "d": 0, "h": 0, "u": 0}]


def test_census_jobs_byte_identical(tmp_path, capsys):
    f1 = tmp_path / "jobs1.csv"
    f8 = tmp_path / "jobs8.csv"
    assert main(["census", "--n", "5", "--avoid", "uu", "--jobs", "1", "--output", str(f1)]) == 0
    assert main(["census", "--n", "5", "--avoid", "uu", "--jobs", "8", "--output", str(f8)]) == 0
    assert f1.read_bytes() == f8.read_bytes()


def test_series_text(capsys):
    rc, out, _ = run(capsys, ["series", "--family", "ternary", "--order", "5"])
    assert rc == 0
    assert "t^5: 273*y^5" in out
    rc, out, _ = run(capsys, ["series", "--family", "master", "--order", "2"])
    assert "t^2: 3*x^2 + 4*x*y + 2*x*z + 3*y^2" in out


def test_series_numeric(capsys):
    rc, out, _ = run(capsys, ["series", "--family", "ud-du", "--order", "6", "--at", "1,0,1"])
    assert rc == 0
    lines = dict(line.split(": ") for line in out.strip().splitlines())
    assert lines["ud"] == "1, 1, 3, 11, 45, 197, 903"
    assert lines["du"] == "1, 1, 5, 27, 157, 957, 6025"
    rc, out, _ = run(capsys, ["series", "--family", "master", "--order", "5", "--at", "1,1,1"])
    assert "1, 2, 12, 96, 880, 8736" in out


def test_series_json(capsys):
    rc, out, _ = run(capsys, ["series", "--family", "star", "--order", "2", "--format", "json"])
    payload = json.loads(out)
    assert {"n": 1, "x": 1, "y": 0, "z": 0, "coeff": 1} in payload["star"]


def test_series_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["series", "--family", "nope", "--order", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["series", "--family", "master", "--order", "25"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["series", "--family", "master", "--order", "3", "--at", "1,2"])
    assert exc.value.code == 2


def test_bijection_decode(capsys):
    rc, out, _ = run(capsys, ["bijection", "--decode", "UD"])
    assert rc == 0
    payload = json.loads(out)
    assert payload == {"edges": [[0, 1]], "jumps": [1], "labels": [1, 2], "n": 1}


def test_bijection_encode(tmp_path, capsys, eight_point_tree):
    tree_file = tmp_path / "tree.json"
    tree_file.write_text(json.dumps(tree_to_json(eight_point_tree)))
    rc, out, _ = run(capsys, ["bijection", "--encode", str(tree_file)])
    assert rc == 0
    assert out.strip() == "UFFUFDDUUDD"
    rc, out, _ = run(capsys, ["bijection", "--encode", str(tree_file), "--format", "json"])
    assert json.loads(out) == list("UFFUFDDUUDD")


def test_bijection_decode_json_list_form(capsys):
    rc, out, _ = run(capsys, ["bijection", "--decode", '["U", "F", "D"]'])
    assert rc == 0
    payload = json.loads(out)
    assert payload["n"] == 2 and payload["jumps"] == [1]


def test_bijection_encode_rejects_level_tree(tmp_path, capsys):
    tree_file = tmp_path / "tree.json"
    tree_file.write_text(json.dumps({"n": 1, "edges": [[0, 1]], "jumps": []}))
    rc, _, err = run(capsys, ["bijection", "--encode", str(tree_file)])
    assert rc == 1
    assert "level" in err


def test_bijection_decode_malformed(capsys):
    rc, _, err = run(capsys, ["bijection", "--decode", "UDX"])
    assert rc == 1 and "malformed" in err
    rc, _, err = run(capsys, ["bijection", "--decode", "FUD"])
    assert rc == 1


def test_bijection_check(capsys):
    rc, out, _ = run(capsys, ["bijection", "--check", "3"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    ids = {c["id"] for c in payload["checks"]}
    assert f"bijection:injective:n=3" in ids


def test_verify_identities_suite(capsys):
    rc, out, _ = run(capsys, ["verify", "--suite", "identities", "--order", "6"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["ok"] is True and payload["failed"] == 0
    assert all(c["id"].startswith("identity:") for c in payload["checks"])


def test_verify_equations_suite(capsys):
    rc, out, _ = run(capsys, ["verify", "--suite", "equations", "--order", "6"])
    assert rc == 0
    payload = json.loads(out)
    ids = {c["id"] for c in payload["checks"]}
    assert "equation:prefix-stability:master" in ids
    assert "equation:homogeneity:uudd" in ids


def test_verify_fault_injection(capsys, monkeypatch):
    # a corrupted formula constant must flip the exit status
    real = formulas.h_avoiding
    monkeypatch.setattr(formulas, "h_avoiding", lambda n: real(n) + (n == 3))
    rc, out, _ = run(capsys, ["verify", "--suite", "theorems", "--max-n", "3"])
    assert rc == 1
    payload = json.loads(out)
    assert payload["failed"] >= 1
    bad = {c["id"] for c in payload["checks"] if not c["pass"]}
    assert any("level-free" in b for b in bad)


def test_verify_deterministic_output(tmp_path):
    f1 = tmp_path / "r1.json"
    f2 = tmp_path / "r2.json"
    assert main(["verify", "--suite", "oracle", "--max-n", "3", "--output", str(f1)]) == 0
    assert main(["verify", "--suite", "oracle", "--max-n", "3", "--jobs", "8", "--output", str(f2)]) == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_oeis_bfile(capsys):
    rc, out, _ = run(capsys, ["oeis", "--sequence", "gnc-h", "--max-n", "6"])
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "0 1"
    assert lines[6] == "6 12985"
    rc, out, _ = run(capsys, ["oeis", "--sequence", "gnc-du-h", "--max-n", "6"])
    assert out.splitlines()[-1] == "6 6025"
    rc, out, _ = run(capsys, ["oeis", "--sequence", "gnc-total", "--max-n", "4"])
    assert out.splitlines()[-1] == "4 880"


def test_oeis_csv_and_errors(capsys, tmp_path):
    rc, out, _ = run(capsys, ["oeis", "--sequence", "little-schroeder", "--max-n", "3", "--format", "csv"])
    assert out.splitlines() == ["n,value", "0,1", "1,1", "2,3", "3,11"]
    with pytest.raises(SystemExit) as exc:
        main(["oeis", "--sequence", "nope", "--max-n", "3"])
    assert exc.value.code == 2
    target = tmp_path / "b.txt"
    assert main(["oeis", "--sequence", "gnc-d", "--max-n", "5", "--output", str(target)]) == 0
    assert target.read_text().endswith("5 3070\n")
