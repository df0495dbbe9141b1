import json

import pytest

from cellideals.cli import enumerate_box, format_report, main, run
from cellideals.grid import canonical_form, symmetries


def report(argv):
    rep, code, fmt = run(argv)
    return rep, code


@pytest.fixture
def windmill_file(tmp_path):
    p = tmp_path / "windmill.grid"
    p.write_text(".#.\n#.#\n.#.\n")
    return str(p)


def test_classify(windmill_file):
    rep, code = report(["classify", windmill_file])
    assert code == 0
    assert rep["schema_version"] == 1 and rep["command"] == "classify"
    assert rep["payload"]["simple"] is False


def test_ideals_compare_windmill(windmill_file):
    rep, code = report(["ideals", "compare", windmill_file, "--probe", "x(3,3)*x(2,2) - x(2,3)*x(3,2)"])
    assert code == 0
    assert rep["payload"]["case"] == "2"
    assert rep["payload"]["witness_in_J_not_L"] in ("x(2,2)*x(3,3) - x(2,3)*x(3,2)",
                                                     "x(2,3)*x(3,2) - x(2,2)*x(3,3)",
                                                     "x(3,3)*x(2,2) - x(2,3)*x(3,2)")


def test_stack_analyze_staircase4():
    rep, code = report(["stack", "analyze", "corpus:staircase4"])
    assert code == 0
    assert rep["payload"]["gorenstein"] is True
    assert rep["payload"]["class_group_rank"] == 4


def test_prime_and_groebner():
    rep, _ = report(["prime", "corpus:bridge"])
    assert rep["payload"] == {"prime": True, "witness": None}
    rep, _ = report(["groebner", "corpus:staircase4", "--ideal", "I", "--order", "lex2"])
    assert rep["payload"]["squarefree_initial_ideal"] is True
    rep, _ = report(["groebner", "corpus:fig22", "--order", "stacklex", "--cd", "right", "--ideal", "L"])
    assert rep["payload"]["size"] >= 1


def test_labeling_commands(tmp_path, windmill_file):
    lab = tmp_path / "center.lab"
    lab.write_text("2 2 1\n3 3 1\n2 3 -1\n3 2 -1\n")
    rep, code = report(["labeling", "check", windmill_file, str(lab)])
    assert code == 0 and rep["payload"]["admissible"] is True
    rep, code = report(["labeling", "reduce", windmill_file, str(lab)])
    assert code == 0 and rep["payload"]["status"] == "stuck"
    bad = tmp_path / "bad.lab"
    bad.write_text("2 2 1\n")
    _, code = report(["labeling", "check", windmill_file, str(bad)])
    assert code == 1


def test_oracle_commands():
    rep, code = report(["oracle", "cover", "corpus:fig22", "--cd", "right"])
    assert code == 0 and rep["payload"]["passed"] is True
    rep, code = report(["oracle", "kernel", "corpus:windmill", "--map", "phi", "--degree", "2"])
    assert rep["payload"]["count"] == 11


def test_exit_codes(tmp_path, capsys):
    assert main(["classify", str(tmp_path / "missing.grid")]) == 2
    bad = tmp_path / "bad.grid"
    bad.write_text("#?\n")
    assert main(["classify", str(bad)]) == 2
    assert "line 1, column 2" in capsys.readouterr().err
    assert main(["survey", "--box", "5x4"]) == 3
    with pytest.raises(SystemExit) as exc:
        main(["classify"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["classify", "corpus:cross", "--json", "--text"])


def test_reports_are_reproducible(capsys):
    main(["survey", "--box", "2x2", "--seed", "3"])
    first = capsys.readouterr().out
    main(["survey", "--box", "2x2", "--seed", "3"])
    assert capsys.readouterr().out == first
    data = json.loads(first)
    assert list(data) == sorted(data)


def test_text_format():
    rep, _, _ = run(["classify", "corpus:cross", "--text"])
    text = format_report(rep, "text")
    assert "convex: true" in text and text.startswith("command: classify")


def test_survey_3x3():
    rep, code = report(["survey", "--box", "3x3"])
    assert code == 0
    p = rep["payload"]
    assert sum(p["cases"].values()) == p["instances"]
    # a finding, reported rather than asserted to be zero
    assert p["I_strict_L_eq_J"] >= 0


def test_survey_dedup_is_symmetry_invariant():
    shapes = enumerate_box(3, 2)
    keys = [canonical_form(P) for P in shapes]
    assert len(keys) == len(set(keys))
    for P in shapes:
        assert all(canonical_form(Q) == canonical_form(P) for Q in symmetries(P))


def test_corpus_command():
    rep, _ = report(["corpus"])
    assert "fig22" in rep["payload"]["names"]
    rep, _ = report(["corpus", "windmill"])
    assert rep["payload"]["grid"] == ".#\n#.#\n.#\n"
