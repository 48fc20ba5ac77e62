import json

import pytest

from dtableau.cli import main

CASE_ONE = "1 1 1 2 1\n2 3 1 4 1\n3 1 2 1 3\n"


@pytest.fixture
def case_one_file(tmp_path):
    path = tmp_path / "pair.txt"
    path.write_text(CASE_ONE + "\n" + CASE_ONE)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_map_prints_both_tableaux(capsys):
    code, out, _ = run(capsys, "map", "--perm", "2 -1")
    assert code == 0
    assert "class: T''" in out
    assert "tau_L: {a1p}" in out and "tau_R: {a2}" in out


def test_map_rejects_a_bad_window(capsys):
    code, _, err = run(capsys, "map", "--perm", "0 1")
    assert code == 2 and "error" in err


def test_map_json(capsys):
    code, out, _ = run(capsys, "map", "--perm", "1 2 3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["class"] == "T'" and data["shape"] == [6]


def test_tau(capsys):
    code, out, _ = run(capsys, "tau", "--perm", "2 -1")
    assert code == 0 and out.splitlines() == ["tau_L: a1p", "tau_R: a2"]


def test_verify_small_rank(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bijection", "--rank", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[-1].startswith("CHECK bijection rank=4 status=PASS detail=pairs=384")


def test_verify_over_budget(capsys):
    code, _, err = run(capsys, "verify", "--suite", "bijection", "--rank", "7")
    assert code == 2 and "--max-rank" in err


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope", "--rank", "2")
    assert code == 2 and "unknown suite" in err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "parity", "--rank", "3", "--format", "json")
    records = json.loads(out)
    assert code == 0 and all(r["status"] == "PASS" for r in records)


def test_normalize_row_tableau(tmp_path, capsys):
    path = tmp_path / "row.txt"
    path.write_text("1 1 1 1 2\n2 1 3 1 4\n")
    code, out, _ = run(capsys, "normalize", "--pair-file", str(path))
    assert code == 0 and "shape: 3,1" in out


def test_apply_case_one(case_one_file, capsys):
    code, out, _ = run(capsys, "apply", "--pair-file", case_one_file, "--op", "a3,a1p:L")
    assert code == 0
    assert "tau_L: {a3}" in out and "shape: 3,1,1,1" in out


def test_apply_outside_domain(case_one_file, capsys):
    code, _, err = run(capsys, "apply", "--pair-file", case_one_file, "--op", "a1p,a3:L")
    assert code == 1 and "does not apply" in err


def test_apply_bad_operator(case_one_file, capsys):
    code, _, _ = run(capsys, "apply", "--pair-file", case_one_file, "--op", "a1p,a2")
    assert code == 2


def test_render_template(capsys):
    code, out, _ = run(capsys, "render", "--template", "C^1")
    assert code == 0 and len(out.strip().splitlines()) == 4


def test_cells_and_classes(capsys):
    code, out, _ = run(capsys, "cells", "--rank", "2")
    assert code == 0 and "coset W': 4 classes" in out
    code, out, _ = run(capsys, "gtd-classes", "--rank", "3")
    assert code == 0 and out.startswith("rank 3: 10 classes")


def test_missing_subcommand():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
