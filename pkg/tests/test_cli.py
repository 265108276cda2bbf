import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzing import COMMANDS, run_fuzz_case
from triplesys import formats as F
from triplesys.cli import main

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
FILES = sorted(CORPUS.glob("*.json"))


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_sl2(capsys):
    code, out, _ = run(capsys, "check", CORPUS / "sl2_lts.json")
    assert code == 0
    assert out.split() == ["lts1", "ok", "lts2", "ok", "lts3", "ok"]


def test_check_broken_fi_prints_witness(capsys):
    code, out, _ = run(capsys, "check", CORPUS / "broken_fi_lts.json")
    assert code == 1
    assert "lts3 FAIL" in out and "at (h, e, h, f, h)" in out


def test_missing_file(capsys):
    code, _, err = run(capsys, "check", CORPUS / "nope.json")
    assert code == 2 and "cannot read" in err


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["check"])
    assert e.value.code == 2
    capsys.readouterr()


@pytest.mark.parametrize("kind,code", [("nambu", 0), ("lts", 0), ("leibniz", 2), ("two-term", 2)])
def test_check_kind_override(capsys, kind, code):
    assert run(capsys, "check", CORPUS / "sl2_lts.json", "--kind", kind)[0] == code


def test_check_json_report(capsys):
    code, out, _ = run(capsys, "check", CORPUS / "broken_fi_lts.json", "--json")
    doc = F.parse(out)
    assert code == 1 and doc.kind == F.REPORT and doc.payload["passed"] is False
    v = doc.payload["violations"][0]
    assert v["identity"] == "lts3" and len(v["witness"]) == 5


@pytest.mark.parametrize("name,code", [
    ("system_skeletal_sl2_cocycle", 0), ("crossed_id_sl2", 0), ("two_vector_sl2_cocycle", 0),
    ("quadruple_nonabelian2_cocycle", 0), ("sl2_standard_rep", 0), ("broken_nambu", 1),
    ("nambu_not_lts", 0),
])
def test_check_documents(capsys, name, code):
    assert run(capsys, "check", CORPUS / f"{name}.json")[0] == code


def test_cohomology_abelian_trivial(capsys, tmp_path):
    rep = {"version": "1", "kind": "representation", "base": {"ref": "zero_lts_2.json"},
           "module_dimension": 1, "module_basis": ["v"], "rho": []}
    path = tmp_path / "trivial.json"
    path.write_text(json.dumps(rep))
    (tmp_path / "zero_lts_2.json").write_text((CORPUS / "zero_lts_2.json").read_text())
    code, out, _ = run(capsys, "cohomology", tmp_path / "zero_lts_2.json", "--rep", path)
    rows = [line.split() for line in out.splitlines()[1:]]
    assert code == 0 and [r[3] for r in rows] == ["2", "2"]


def test_cohomology_sl2_adjoint_table(capsys):
    code, out, _ = run(capsys, "cohomology", CORPUS / "sl2_lts.json", "--rep", "adjoint")
    assert code == 0
    assert [line.split() for line in out.splitlines()[1:]] == [["1", "9", "6", "3"],
                                                               ["2", "24", "18", "0"]]


def test_cohomology_json_deterministic(capsys):
    a = run(capsys, "cohomology", CORPUS / "sl2_lts.json", "--json")[1]
    b = run(capsys, "cohomology", CORPUS / "sl2_lts.json", "--json")[1]
    assert a == b and F.parse(a).payload["data"]["rows"][0]["dim_h"] == 3


def test_cohomology_bad_inputs(capsys):
    assert run(capsys, "cohomology", CORPUS / "sl2_lts.json", "--max-degree", "0")[0] == 2
    assert run(capsys, "cohomology", CORPUS / "broken_fi_lts.json")[0] == 1
    assert run(capsys, "cohomology", CORPUS / "sl2_lts.json", "--rep",
               CORPUS / "sl2_lts.json")[0] == 2


def test_cohomology_broken_rep(capsys, tmp_path):
    obj = json.loads((CORPUS / "sl2_standard_rep.json").read_text())
    obj["rho"][0]["matrix"][0][0] = 5
    path = tmp_path / "bad_rep.json"
    path.write_text(json.dumps(obj))
    code, out, _ = run(capsys, "cohomology", CORPUS / "sl2_lts.json", "--rep", path)
    assert code == 1 and "FAIL" in out


def test_mc(capsys):
    assert run(capsys, "mc", CORPUS / "sl2_lts.json")[:2] == (0, "MC: yes; constraints: yes\n")
    code, out, _ = run(capsys, "mc", CORPUS / "broken_nambu.json")
    assert code == 1 and out.startswith("MC: no (defect at (e⊗e, e⊗e, e))")
    assert run(capsys, "mc", CORPUS / "zero_lts_2.json")[0] == 0
    assert run(capsys, "mc", CORPUS / "sl2_lie.json")[0] == 2


@pytest.mark.parametrize("degree", [1, 2])
def test_oracle(capsys, degree):
    assert run(capsys, "oracle", CORPUS / "sl2_lts.json", "--degree", degree)[0] == 0


def test_oracle_rejects_nambu(capsys):
    assert run(capsys, "oracle", CORPUS / "nambu_not_lts.json")[0] == 2
    assert run(capsys, "oracle", CORPUS / "sl2_lts.json", "--degree", "0")[0] == 2


@pytest.mark.parametrize("name,there,back", [
    ("system_skeletal_sl2_cocycle", "quadruple", "skeletal"),
    ("system_skeletal_nonabelian2_cocycle", "quadruple", "skeletal"),
    ("system_strict_id_sl2", "crossed", "strict"),
    ("system_strict_abelian_over_sl2", "crossed", "strict"),
    ("system_skeletal_nonabelian2_cocycle", "categorified", "decategorified"),
])
def test_convert_round_trip(capsys, tmp_path, name, there, back):
    src = CORPUS / f"{name}.json"
    mid, out = tmp_path / "mid.json", tmp_path / "out.json"
    assert run(capsys, "convert", src, "--to", there, "--out", mid)[0] == 0
    assert run(capsys, "convert", mid, "--to", back, "--out", out)[0] == 0
    if back != "decategorified":
        assert out.read_bytes() == src.read_bytes()
    else:
        assert run(capsys, "check", out)[0] == 0


def test_convert_preconditions(capsys):
    code, _, err = run(capsys, "convert", CORPUS / "system_skeletal_sl2_cocycle.json", "--to", "crossed")
    assert code == 1 and "not strict" in err
    assert run(capsys, "convert", CORPUS / "system_strict_id_sl2.json", "--to", "quadruple")[0] == 1
    assert run(capsys, "convert", CORPUS / "sl2_lts.json", "--to", "crossed")[0] == 2
    assert run(capsys, "convert", CORPUS / "crossed_id_sl2.json", "--to", "strict", "--out",
               CORPUS / "no_such_dir" / "x.json")[0] == 2


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "triplesys.cli", "mc", str(CORPUS / "sl2_lts.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "MC: yes; constraints: yes\n"


@given(st.sampled_from(FILES), st.integers(0, 10 ** 9), st.sampled_from(COMMANDS))
def test_fuzzed_inputs_exit_codes(path, seed, command):
    valid, code = run_fuzz_case(path, seed, command)
    assert code in (0, 1, 2)
    if not valid:
        assert code == 2
