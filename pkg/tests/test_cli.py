import json

import pytest

from hopfcoh.catalog import parse_instance
from hopfcoh.cli import main
from hopfcoh.errors import NotPrime, ParseError


def run(tmp_path, *argv):
    out = tmp_path / "report.json"
    code = main(list(argv) + ["--out", str(out)])
    return code, (json.loads(out.read_text()) if out.exists() else None)


def test_grammar():
    assert parse_instance("taft:2:5").n == 2
    assert parse_instance("taft", p=5, n=3).n == 3
    assert parse_instance("kD:s3:5").family == "s3"
    assert parse_instance("s3:inv").kind == "semidirect"
    assert parse_instance("semidirect:4:3:triv").m == 4
    with pytest.raises(NotPrime):
        parse_instance("taft:2:6")
    for bad in ["taft:x:5", "kG:dihedral:3:5", "nothing", "semidirect:3:3:inv", "taft:2"]:
        with pytest.raises(ParseError):
            parse_instance(bad)


def test_check(tmp_path):
    code, rep = run(tmp_path, "check", "taft:2:5")
    assert code == 0 and rep["ok"]


def test_check_input_errors(tmp_path):
    assert main(["check", "taft:2:6"]) == 2
    assert main(["check", "taft:3:5"]) == 2
    assert main(["check", "bogus:1"]) == 2


def test_cohomology_reports(tmp_path):
    code, rep = run(tmp_path, "cohomology", "taft:2:5", "--coeff", "E")
    assert code == 0
    assert len(rep["h0"]) == 4 and len(rep["h1_classes"]) == 2
    code, rep = run(tmp_path, "cohomology", "kG:cyclic:3:7", "--coeff", "trivial")
    assert code == 0 and len(rep["h1_classes"]) == 3


def test_budget_exit_code(tmp_path, monkeypatch):
    assert main(["cohomology", "taft:2:5", "--budget", "10"]) == 3
    monkeypatch.setenv("HOPFCOH_BUDGET", "10")
    assert main(["cohomology", "taft:2:5"]) == 3
    monkeypatch.setenv("HOPFCOH_BUDGET", "ten")
    assert main(["cohomology", "taft:2:5"]) == 2


@pytest.mark.parametrize(
    "vid,inst",
    [("thm2.2", "taft:2:5"), ("thm2.4", "taft:2:5"), ("prop4.1", "s3:inv"), ("cross-check", "s3:inv"), ("grouplike-count", "taft:2:5")],
)
def test_verify(tmp_path, vid, inst):
    code, rep = run(tmp_path, "verify", vid, inst)
    assert code == 0 and rep["ok"]


def test_unknown_verification():
    assert main(["verify", "thm9.9", "taft:2:5"]) == 2


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["verify", "thm2.2", "taft:2:5", "--out", str(a)])
    main(["verify", "thm2.2", "taft:2:5", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()
