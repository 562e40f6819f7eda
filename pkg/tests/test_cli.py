"""End-to-end command tests driven through main()."""

import json

import pytest

from kirchlab.cli import format_significant, main

K2_TEXT = "2 1\n0 1\n"
P3_TEXT = "3 2\n0 1\n1 2\n"


def write_graph(tmp_path, text, name="g.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


# ------------------------------------------------------------------ transform


def test_transform_stdout(tmp_path, capsys):
    path = write_graph(tmp_path, K2_TEXT)
    assert main(["transform", path]) == 0
    assert capsys.readouterr().out == "4 4\n0 1\n0 2\n2 3\n1 3\n"


def test_transform_pent_to_file(tmp_path, capsys):
    path = write_graph(tmp_path, K2_TEXT)
    out = tmp_path / "w.txt"
    assert main(["transform", "--kind", "pent", path, "-o", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text() == "5 5\n0 1\n0 2\n2 3\n3 4\n1 4\n"


def test_transform_env_kind(tmp_path, capsys, monkeypatch):
    path = write_graph(tmp_path, K2_TEXT)
    monkeypatch.setenv("KLAB_KIND", "pent")
    assert main(["transform", path]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "5 5"


def test_transform_flag_beats_env(tmp_path, capsys, monkeypatch):
    path = write_graph(tmp_path, K2_TEXT)
    monkeypatch.setenv("KLAB_KIND", "pent")
    assert main(["transform", "--kind", "quad", path]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "4 4"


def test_transform_rejects_kind_none_from_env(tmp_path, capsys, monkeypatch):
    path = write_graph(tmp_path, K2_TEXT)
    monkeypatch.setenv("KLAB_KIND", "none")
    assert main(["transform", path]) == 2
    assert "kind 'none'" in capsys.readouterr().err


def test_transform_rejects_kind_none_flag(tmp_path, capsys):
    # argparse enforces the choice list itself
    path = write_graph(tmp_path, K2_TEXT)
    with pytest.raises(SystemExit) as exc:
        main(["transform", "--kind", "none", path])
    assert exc.value.code == 2


# --------------------------------------------------------------------- resist


def test_resist_json(tmp_path, capsys):
    path = write_graph(tmp_path, K2_TEXT)
    assert main(["resist", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "quad"
    assert payload["n"] == 4
    assert abs(payload["matrix"][0][1] - 0.75) <= 1e-12
    assert abs(payload["matrix"][0][3] - 1.0) <= 1e-12


def test_resist_csv(tmp_path, capsys):
    path = write_graph(tmp_path, K2_TEXT)
    assert main(["resist", "--format", "csv", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    assert lines[0] == "0.0,0.75,0.75,1.0"


def test_resist_plain(tmp_path, capsys):
    path = write_graph(tmp_path, K2_TEXT)
    assert main(["resist", "--format", "plain", path]) == 0
    first = capsys.readouterr().out.splitlines()[0].split()
    assert [float(v) for v in first] == [0.0, 0.75, 0.75, 1.0]


def test_resist_self_check_passes(tmp_path, capsys):
    path = write_graph(tmp_path, P3_TEXT)
    assert main(["resist", "--kind", "pent", "--self-check", path]) == 0
    assert capsys.readouterr().err == ""


def test_resist_self_check_fails_at_tiny_tol(tmp_path, capsys):
    path = write_graph(tmp_path, K2_TEXT)
    assert main(["resist", "--self-check", "--tol", "1e-30", path]) == 1
    captured = capsys.readouterr()
    assert "self-check failed" in captured.err
    # the matrix is still printed
    assert json.loads(captured.out)["n"] == 4


def test_resist_invalid_env_tol(tmp_path, capsys, monkeypatch):
    path = write_graph(tmp_path, K2_TEXT)
    monkeypatch.setenv("KLAB_TOL", "not-a-number")
    assert main(["resist", "--self-check", path]) == 2
    assert "KLAB_TOL" in capsys.readouterr().err


def test_resist_rejects_negative_tol(tmp_path, capsys):
    path = write_graph(tmp_path, K2_TEXT)
    assert main(["resist", "--tol", "-1", path]) == 2
    assert "positive" in capsys.readouterr().err


# ------------------------------------------------------------------ kirchhoff


def test_kirchhoff_digit_strings(tmp_path, capsys):
    path = write_graph(tmp_path, K2_TEXT)
    assert main(["kirchhoff", path]) == 0
    assert main(["kirchhoff", "--kind", "pent", path]) == 0
    assert main(["kirchhoff", "--kind", "none", path]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["5.00000000000", "10.0000000000", "1.00000000000"]


def test_kirchhoff_p3_quadrilateral(tmp_path, capsys):
    path = write_graph(tmp_path, P3_TEXT)
    assert main(["kirchhoff", path]) == 0
    assert capsys.readouterr().out == "25.0000000000\n"


def test_format_significant():
    assert format_significant(5.0) == "5.00000000000"
    assert format_significant(25.0) == "25.0000000000"
    assert format_significant(0.75) == "0.750000000000"
    assert format_significant(0.9999999999999998) == "1.00000000000"
    assert format_significant(0.0) == "0.00000000000"
    assert format_significant(123456789012345.0) == "123456789012000"


# --------------------------------------------------------------------- verify


def test_verify_small_corpus(tmp_path, capsys):
    assert main(["verify", "--count", "3", "--n-max", "6", "--seed", "11"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["pass"] is True
    assert len(payload["reports"]) == 6
    kinds = [r["kind"] for r in payload["reports"]]
    assert kinds == ["quad", "pent"] * 3


def test_verify_env_count(capsys, monkeypatch):
    monkeypatch.setenv("KLAB_COUNT", "2")
    monkeypatch.setenv("KLAB_N_MAX", "5")
    assert main(["verify"]) == 0
    assert len(json.loads(capsys.readouterr().out)["reports"]) == 4


def test_verify_rejects_bad_count(capsys):
    assert main(["verify", "--count", "0"]) == 2
    assert "count" in capsys.readouterr().err


# ---------------------------------------------------------------------- audit


def test_audit_json(tmp_path, capsys):
    path = write_graph(tmp_path, K2_TEXT)
    assert main(["audit", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    ids = [c["id"] for c in payload["clauses"]]
    assert ids == ["3.1.i", "3.1.ii", "3.1.iii", "3.1.iv", "3.1.v"]
    assert all("notes" in c and "max_delta" in c for c in payload["clauses"])


def test_audit_pent_json(tmp_path, capsys):
    path = write_graph(tmp_path, P3_TEXT)
    assert main(["audit", "--kind", "pent", path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["clauses"]) == 8


# --------------------------------------------------------------------- errors


def test_missing_input_file(tmp_path, capsys):
    assert main(["resist", str(tmp_path / "absent.txt")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_malformed_input(tmp_path, capsys):
    path = write_graph(tmp_path, "0 0\n")
    assert main(["transform", path]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_disconnected_input(tmp_path, capsys):
    path = write_graph(tmp_path, "4 2\n0 1\n2 3\n")
    assert main(["resist", path]) == 2
    assert "connected" in capsys.readouterr().err.lower()


def test_no_command(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
