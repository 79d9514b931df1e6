import json
import os

import pytest

from weak_crossed import __version__
from weak_crossed.cli import EXIT_FAILED, EXIT_MALFORMED, EXIT_OK, LOG_FILE_ENV, main
from weak_crossed.instance import InstanceFile


@pytest.fixture
def export(tmp_path, capsys):
    """Write a built-in instance to disk and return its path."""

    def _export(name: str, *extra: str):
        path = tmp_path / f"{name}.json"
        assert main(["fixture", name, "--out", str(path), *extra]) == EXIT_OK
        capsys.readouterr()
        return path

    return _export


def _rewrite(path, edit):
    document = json.loads(path.read_text())
    edit(document)
    path.write_text(json.dumps(document))
    return path


def test_fixture_export(tmp_path, capsys):
    path = tmp_path / "paper.json"
    assert main(["fixture", "paper8", "--out", str(path)]) == EXIT_OK
    assert capsys.readouterr().out == f"paper8: dim H = 8, dim A = 2 -> {path}\n"
    assert InstanceFile.load(path).summary() == "field QQ, dim H = 8, dim A = 2, action, bb cocycle"


def test_validate(export, capsys):
    path = export("paper8")
    assert main(["validate", str(path), "--format", "machine"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == f"VERSION {__version__}"
    assert lines[1] == f"DIGEST {InstanceFile.load(path).digest}"
    assert "COND antipode-left PASS" in lines
    assert lines[-1] == "SUMMARY PASS"


def test_validate_reports_a_broken_antipode(export, capsys):
    def identity_antipode(document):
        document["hopf"]["antipode"]["entries"] = [[i, i, 1] for i in range(8)]

    path = _rewrite(export("paper8"), identity_antipode)
    assert main(["validate", str(path)]) == EXIT_FAILED
    out = capsys.readouterr().out
    assert "(antipode-left)" in out
    assert out.endswith("SUMMARY FAIL\n")

    assert main(["conditions", str(path)]) == EXIT_FAILED
    assert "error: Not a weak Hopf algebra" in capsys.readouterr().err


def test_paper_conditions(export, capsys):
    path = export("paper8")
    assert main(["conditions", str(path), "--format", "machine"]) == EXIT_FAILED
    lines = capsys.readouterr().out.splitlines()
    assert "COND 10 FAIL witness=5,0" in lines
    assert "COND 1 PASS" in lines
    assert lines[-1] == "SUMMARY FAIL"


def test_groupoid_conditions(export, capsys):
    path = export("groupoid-2", "--field", "GF(3)")
    assert main(["conditions", str(path), "--set", "bb"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "conditions: bb" in out
    assert out.endswith("SUMMARY PASS\n")


def test_build(export, tmp_path, capsys):
    path = export("paper8")
    out_bb = tmp_path / "bb.json"
    assert main(["build", str(path), "--construction", "bb", "--out", str(out_bb)]) == EXIT_OK
    product = InstanceFile.load(out_bb).product
    assert product is not None and product.verified
    assert product.space.dim == 8

    out_ag = tmp_path / "ag.json"
    assert main(["build", str(path), "--construction", "ag", "--out", str(out_ag)]) == EXIT_FAILED
    assert "(hypotheses)" in capsys.readouterr().out
    assert not InstanceFile.load(out_ag).product.verified


def test_bb_conditions_without_a_cocycle(export, capsys):
    path = _rewrite(export("paper8"), lambda document: document.pop("cocycle"))
    assert main(["conditions", str(path), "--set", "bb", "--format", "machine"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    for c_id in ("1", "2", "3", "4"):
        assert f"COND {c_id} PASS" in lines
    assert "COND 11 SKIP" in lines
    assert lines[-1] == "SUMMARY PASS"


def test_smash_constructions_exit_cleanly(export, tmp_path):
    path = export("smash-c2")
    tables = []
    for construction in ("bb", "ag"):
        out = tmp_path / f"{construction}.json"
        assert main(["build", str(path), "--construction", construction, "--out", str(out)]) == EXIT_OK
        product = InstanceFile.load(out).product
        assert product.space.dim == 4
        tables.append(json.loads(out.read_text())["product"]["mult"])
    assert tables[0] == tables[1]


def test_build_needs_a_cocycle(export, tmp_path, capsys):
    path = _rewrite(export("paper8"), lambda document: document.pop("cocycle"))
    out = tmp_path / "out.json"
    assert main(["build", str(path), "--construction", "bb", "--out", str(out)]) == EXIT_MALFORMED
    assert "needs a cocycle block" in capsys.readouterr().err
    assert not out.exists()


def test_compare(export, capsys):
    assert main(["compare", str(export("paper8"))]) == EXIT_OK
    out = capsys.readouterr().out
    assert "CONFIRMED: (10) fails at G_10^01" in out
    assert "NOT CONFIRMED" not in out
    assert "psi:" not in out

    assert main(["compare", str(export("groupoid-2"))]) == EXIT_OK
    out = capsys.readouterr().out
    assert "CONFIRMED: ψ is a left A-linear, right H-colinear algebra isomorphism" in out
    assert "psi:\n" in out


def test_malformed_input(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"field": "QQ", "hopf": {"counit": [[0, 1.5]]}}')
    assert main(["validate", str(path)]) == EXIT_MALFORMED
    assert "error: Floating-point value 1.5" in capsys.readouterr().err

    assert main(["fixture", "nope", "--out", str(tmp_path / "x.json")]) == EXIT_MALFORMED
    assert "Unknown fixture" in capsys.readouterr().err


def test_log_file(export, tmp_path):
    log = tmp_path / "run.log"
    os.environ[LOG_FILE_ENV] = str(log)
    assert main(["-v", "validate", str(export("smash-c2"))]) == EXIT_OK
    assert "Loaded instance" in log.read_text()


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert capsys.readouterr().out == f"weak-crossed {__version__}\n"
