import json

import pytest

from srdepth import rp2_minimal, to_facet_text
from srdepth.cli import main


@pytest.fixture
def rp2_file(tmp_path):
    path = tmp_path / "rp2.facets"
    path.write_text(to_facet_text(rp2_minimal()), encoding="utf-8")
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_depth_text_output(capsys, rp2_file):
    code, out, _ = run_cli(capsys, "depth", rp2_file, "--field", "p=2")
    assert code == 0
    assert "reisner=2" in out and "topological=2" in out and "auslander_buchsbaum=2" in out
    assert "cohen_macaulay: false" in out


def test_depth_rationals(capsys, rp2_file):
    code, out, _ = run_cli(capsys, "depth", rp2_file, "--field", "q")
    assert code == 0
    assert "reisner=3" in out
    assert "cohen_macaulay: true" in out


def test_depth_json_schema(capsys, rp2_file):
    code, out, _ = run_cli(capsys, "depth", rp2_file, "--field", "p=2", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["m"] == 6 and report["dim"] == 2
    assert report["f_vector"] == [1, 6, 15, 10]
    assert report["field"] == "p=2"
    assert report["depth"] == {
        "reisner": 2,
        "topological": 2,
        "auslander_buchsbaum": 2,
        "agree": True,
    }
    assert report["cohen_macaulay"] is False
    assert report["reduced_cohomology"] == {"-1": 0, "0": 0, "1": 1, "2": 1}


def test_limits_json(capsys, tmp_path):
    path = tmp_path / "c3.facets"
    path.write_text("1 2\n2 3\n1 3\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "limits", str(path), "--field", "q", "--json", "--d-max", "6")
    assert code == 0
    report = json.loads(out)
    assert report["verdicts"] == {"srdec": "pass"}
    assert report["limits"]["1"]["0"] == 1
    assert report["limits"]["0"]["2"] == 3
    assert report["rho"]["kernel"] == {"0": 0, "2": 0, "4": 0, "6": 0}


def test_verify_all_pass(capsys, rp2_file):
    code, out, _ = run_cli(capsys, "verify", rp2_file, "--field", "p=2", "--json", "--d-max", "8")
    assert code == 0
    report = json.loads(out)
    assert report["verdicts"] == {
        "srdec": "pass",
        "star_link": "pass",
        "key_lemma": "pass",
        "munkres": "pass",
    }


def test_verify_irrelevant_complex(capsys, tmp_path):
    path = tmp_path / "irrelevant.json"
    path.write_text('{"m": 0, "facets": [[]]}', encoding="utf-8")
    code, out, _ = run_cli(capsys, "verify", str(path), "--field", "q", "--json")
    assert code == 0
    report = json.loads(out)
    assert all(v == "pass" for v in report["verdicts"].values())
    assert report["depth"]["reisner"] == 0


def test_missing_file_exits_2(capsys):
    code, _, err = run_cli(capsys, "depth", "/nonexistent/file.facets")
    assert code == 2
    assert "error" in err


def test_bad_facet_file_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.facets"
    path.write_text("1 2\nthree 4\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "depth", str(path))
    assert code == 2


def test_unused_vertex_exits_2(capsys, tmp_path):
    path = tmp_path / "gap.facets"
    path.write_text("m 3\n1 3\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "depth", str(path))
    assert code == 2


def test_bad_field_exits_2(capsys, rp2_file):
    code, _, _ = run_cli(capsys, "depth", rp2_file, "--field", "p=4")
    assert code == 2


def test_depth_deterministic_output(capsys, rp2_file):
    _, out1, _ = run_cli(capsys, "depth", rp2_file, "--field", "p=2", "--json")
    _, out2, _ = run_cli(capsys, "depth", rp2_file, "--field", "p=2", "--json")
    assert out1 == out2


def test_verify_deterministic_output(capsys, rp2_file):
    _, out1, _ = run_cli(capsys, "verify", rp2_file, "--field", "q", "--d-max", "8")
    _, out2, _ = run_cli(capsys, "verify", rp2_file, "--field", "q", "--d-max", "8")
    assert out1 == out2


def test_corpus_named_deterministic(capsys, tmp_path):
    out_a, out_b = tmp_path / "a", tmp_path / "b"
    assert run_cli(capsys, "corpus", "named", str(out_a))[0] == 0
    assert run_cli(capsys, "corpus", "named", str(out_b))[0] == 0
    files_a = sorted(p.name for p in out_a.iterdir())
    files_b = sorted(p.name for p in out_b.iterdir())
    assert files_a == files_b and "manifest.json" in files_a
    for name in files_a:
        assert (out_a / name).read_bytes() == (out_b / name).read_bytes()


def test_corpus_random_deterministic(capsys, tmp_path):
    out_a, out_b = tmp_path / "ra", tmp_path / "rb"
    args = ["--m", "6", "--count", "5", "--seed", "20240101"]
    assert run_cli(capsys, "corpus", "random", str(out_a), *args)[0] == 0
    assert run_cli(capsys, "corpus", "random", str(out_b), *args)[0] == 0
    for name in sorted(p.name for p in out_a.iterdir()):
        assert (out_a / name).read_bytes() == (out_b / name).read_bytes()
    manifest = json.loads((out_a / "manifest.json").read_text())
    assert manifest["count"] == 5 and len(manifest["entries"]) == 5


def test_corpus_random_seed_changes_bytes(capsys, tmp_path):
    out_a, out_b = tmp_path / "sa", tmp_path / "sb"
    run_cli(capsys, "corpus", "random", str(out_a), "--m", "6", "--count", "3", "--seed", "1")
    run_cli(capsys, "corpus", "random", str(out_b), "--m", "6", "--count", "3", "--seed", "2")
    names = sorted(p.name for p in out_a.iterdir() if p.name != "manifest.json")
    assert any(
        (out_a / n).read_bytes() != (out_b / n).read_bytes() for n in names
    )


def test_depth_full_simplex_over_gf5(capsys, tmp_path):
    path = tmp_path / "simplex_4.facets"
    path.write_text("1 2 3 4\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "depth", str(path), "--field", "p=5", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["depth"]["reisner"] == 4
    assert report["cohen_macaulay"] is True


def test_verify_random_complex(capsys, tmp_path):
    from srdepth import random_complex

    path = tmp_path / "random.facets"
    path.write_text(to_facet_text(random_complex(7, 2, 0.5, 99)), encoding="utf-8")
    code, out, _ = run_cli(capsys, "verify", str(path), "--field", "p=2", "--json", "--d-max", "12")
    assert code == 0
    assert all(v == "pass" for v in json.loads(out)["verdicts"].values())


def test_json_input_accepted(capsys, tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps({"m": 4, "facets": [[1, 2], [2, 3], [3, 4], [1, 4]]}))
    code, out, _ = run_cli(capsys, "depth", str(path), "--field", "p=5", "--json")
    assert code == 0
    assert json.loads(out)["depth"]["reisner"] == 2
