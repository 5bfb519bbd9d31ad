import json

import pytest

from skewfusion.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_tableau_reference_shape(capsys):
    code, doc = run(capsys, "tableau", "--lambda", "5,3,3,3,3",
                    "--mu", "3,3,2")
    assert code == 0
    assert doc["contents"] == [-3, -4, -2, -3, 0, -1, -2, 3, 4]
    assert doc["columns"] == [1, 1, 2, 2, 3, 3, 3, 4, 5]


def test_fuse_checks_pass(capsys):
    code, doc = run(capsys, "fuse", "--lambda", "2,1", "--N", "2",
                    "--check-symmetrizer", "--check-path")
    assert code == 0
    assert doc["checks"] == {"symmetrizer": True, "path_independence": True}


def test_fuse_custom_path(capsys):
    base = run(capsys, "fuse", "--lambda", "2,2", "--mu", "1", "--N", "2")
    custom = run(capsys, "fuse", "--lambda", "2,2", "--mu", "1", "--N", "2",
                 "--path", "2,5,11")
    assert base[0] == custom[0] == 0
    assert base[1]["operator"] == custom[1]["operator"]


def test_brauer_compare_all(capsys):
    code, doc = run(capsys, "brauer", "--lambda", "2", "--N", "2", "--M", "0",
                    "--compare-all")
    assert code == 0
    assert doc["checks"]["triple_equality"] is True


def test_brauer_rejects_inadmissible_shape(capsys):
    # three-box column needs N + M >= 3
    code = main(["brauer", "--lambda", "1,1,1", "--N", "2", "--M", "0"])
    capsys.readouterr()
    assert code == 3


def test_dim(capsys):
    code, doc = run(capsys, "dim", "--lambda", "2,2", "--mu", "1", "--N", "2")
    assert code == 0
    assert doc["jt"] == doc["ssyt"] == 2


def test_verify_subcommands_pass(capsys):
    cases = [
        ["verify", "prop1", "--lambda", "2,1", "--N", "2"],
        ["verify", "prop2", "--lambda", "2", "--N", "2", "--z", "1/2"],
        ["verify", "prop3", "--lambda", "2,1", "--N", "2", "--M", "1"],
        ["verify", "prop4", "--lambda", "1,1", "--N", "2", "--M", "1"],
        ["verify", "rtt", "--N", "2", "--points", "0,1"],
        ["verify", "twisted", "--N", "2", "--points", "1/2"],
        ["verify", "traceless", "--lambda", "2", "--N", "2"],
        ["verify", "rank", "--lambda", "3,2", "--mu", "1", "--N", "3"],
    ]
    for argv in cases:
        code, doc = run(capsys, *argv)
        assert code == 0, (argv, doc)
        assert doc["pass"] is True, argv


def test_verify_traceless_requires_column_bound(capsys):
    code = main(["verify", "traceless", "--lambda", "1,1,1", "--N", "2"])
    capsys.readouterr()
    assert code == 3


def test_sweep_tiny(capsys):
    code, doc = run(capsys, "sweep", "--n-fusion", "2", "--n-brauer", "2",
                    "--n-intertwiner", "1",
                    "--checks", "fusion_path,rank,brauer_triple")
    assert code == 0
    assert doc["passed"] is True
    assert set(doc["checks"]) == {"fusion_path", "rank", "brauer_triple"}
    for rec in doc["checks"].values():
        assert rec["failed"] == 0 and rec["cases"] > 0


def test_sweep_empty_checks(capsys):
    code, doc = run(capsys, "sweep", "--checks", "")
    assert code == 0
    assert doc["checks"] == {}


def test_sweep_unknown_check(capsys):
    code = main(["sweep", "--checks", "nonsense"])
    capsys.readouterr()
    assert code == 2


def test_bad_partition_is_input_error(capsys):
    code = main(["tableau", "--lambda", "1,2"])
    capsys.readouterr()
    assert code == 2


def test_mu_not_contained_is_input_error(capsys):
    code = main(["tableau", "--lambda", "2", "--mu", "3"])
    capsys.readouterr()
    assert code == 2


def test_duplicate_path_is_input_error(capsys):
    code = main(["fuse", "--lambda", "2,2", "--mu", "1", "--N", "2",
                 "--path", "1,1"])
    capsys.readouterr()
    assert code == 2


def test_zero_denominator_is_pole_error(capsys):
    code = main(["verify", "prop2", "--lambda", "2", "--N", "2", "--z", "1/0"])
    capsys.readouterr()
    assert code == 4


def test_size_guard_and_force(capsys, monkeypatch):
    monkeypatch.setenv("FUSION_MAX_DIM", "4")
    code = main(["fuse", "--lambda", "2,1", "--N", "2"])
    capsys.readouterr()
    assert code == 3
    code, doc = run(capsys, "fuse", "--lambda", "2,1", "--N", "2",
                    "--force-size")
    assert code == 0 and "operator" in doc


def test_output_is_deterministic(capsys):
    a = run(capsys, "brauer", "--lambda", "2,1", "--N", "3", "--M", "1")
    b = run(capsys, "brauer", "--lambda", "2,1", "--N", "3", "--M", "1")
    assert a == b


def test_out_file_and_pretty(tmp_path, capsys):
    target = tmp_path / "op.json"
    code = main(["fuse", "--lambda", "2", "--N", "2", "--out", str(target),
                 "--pretty"])
    assert code == 0
    assert capsys.readouterr().out == ""
    doc = json.loads(target.read_text())
    assert "operator" in doc
    assert target.read_text().startswith("{\n")
