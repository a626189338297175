import io
import json

import pytest

from app.commands import structure
from app.main import run
from app.models.schemas import ExprDocument, expr_from_document
from core.errors import InvariantError
from core.qkcore import quantized_ideal_sheaf

from conftest import shape


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_qideal_text():
    code, out, _ = invoke("qideal", "Gr(2,4)", "[2,1]")
    assert code == 0
    assert out.strip() == "O^[2,1] - O^[2,2] - q*O^[] + q*O^[1]"


def test_ideal_lagrangian():
    code, out, _ = invoke("ideal", "LG(4)", "[3,2]")
    assert code == 0
    assert out.strip() == "O^[3,2] - O^[4,2] - O^[3,2,1] + O^[4,2,1]"


def test_ideal_accepts_box_coordinates():
    code, out, _ = invoke("ideal", "Gr(2,4)", '{"boxes": [[1,1],[1,2],[2,1]]}')
    assert code == 0
    assert out.strip() == "O^[2,1] - O^[2,2]"


def test_dist_and_psi():
    assert invoke("dist", "Gr(2,4)", "[1]", "[]")[:2] == (0, "1\n")
    assert invoke("psi", "Gr(3,6)", "[3,2,2]")[:2] == (0, "[1,1]\n")


def test_poset_diagram():
    code, out, _ = invoke("poset", "Gr(2,4)")
    lines = out.splitlines()
    assert code == 0
    assert lines[:4] == ["space: Gr(2,4)", "dim: 4", "shapes: 6", "z1: [2,1]"]
    assert lines[5:7] == ["# #", "# o"]


def test_poset_marks_long_boxes_when_not_minuscule():
    code, out, _ = invoke("poset", "LG(3)", "--format", "diagram")
    assert code == 0
    assert out.splitlines()[:3] == ["* # #", "  . o", "    ."]


def test_poset_json():
    code, out, _ = invoke("poset", "E7", "--format", "json")
    info = json.loads(out)
    assert code == 0
    assert info["dim"] == 27
    assert info["shapes"] == 56
    assert sum(1 for b in info["boxes"] if b["z1"]) == 17


def test_shapes_json():
    code, out, _ = invoke("shapes", "Gr(2,4)", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert len(rows) == 6
    assert rows[1] == {"shape": [1], "length": 1, "dual": [2, 1]}


def test_expression_json_round_trip(gr24):
    code, out, _ = invoke("qideal", "Gr(2,4)", "[2,1]", "--format", "json")
    assert code == 0
    doc = ExprDocument.model_validate(json.loads(out))
    assert doc.basis.value == "Opposite"
    assert expr_from_document(gr24, doc) == quantized_ideal_sheaf(gr24, shape(gr24, 2, 1))


def test_pair_from_file(tmp_path):
    code, out, _ = invoke("qideal", "Gr(2,4)", "[2,1]", "--format", "json")
    path = tmp_path / "iq.json"
    path.write_text(out, encoding="utf-8")
    assert invoke("pair", "Gr(2,4)", str(path), "[2,1]")[:2] == (0, "1\n")
    assert invoke("pair", "Gr(2,4)", str(path), "[1]")[:2] == (0, "0\n")


def test_pair_in_quantized_basis(tmp_path):
    doc = {
        "space": "Gr(2,4)",
        "basis": "QIdeal",
        "terms": [{"shape": [1], "q": 0, "coeff": [{"w": [0, 0, 0], "c": 1}]}],
    }
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    assert invoke("pair", "Gr(2,4)", str(path), "[1]")[:2] == (0, "1\n")


def test_pair_with_identity(tmp_path):
    doc = {
        "space": "Gr(2,4)",
        "basis": "Opposite",
        "terms": [{"shape": [1], "q": 0, "coeff": [{"w": [0, 0, 0], "c": 1}]}],
    }
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = invoke("pair", "Gr(2,4)", str(path), "[]")
    assert code == 0
    assert out.strip() == "(q)/(1-q)"


def test_pair_rejects_other_space(tmp_path):
    doc = {"space": "LG(3)", "basis": "Opposite", "terms": []}
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    assert invoke("pair", "Gr(2,4)", str(path), "[]")[0] == 2


def test_detq():
    code, out, _ = invoke("detq", "2", "4", "[1]")
    assert code == 0
    assert out.strip() == ("T2*T4*O^[1] + T2*T3*O^[2] + T1*T4*O^[1,1] + T1*T3*O^[2,1] "
                           "+ T1*T2*O^[2,2] + T3*T4*q*O^[]")
    code, out, _ = invoke("detq", "2", "4", "[1]", "--nonequivariant")
    assert out.strip() == "O^[1] + O^[2] + O^[1,1] + O^[2,1] + O^[2,2] + q*O^[]"


def test_oracle_commands():
    assert invoke("oracle", "qh", "2", "4", "[1]", "[2,1]")[:2] == (0, "X^[2,2] + q*X^[]\n")
    code, out, _ = invoke("oracle", "check-dist", "2", "4")
    assert code == 0
    assert out.strip() == "36 pairs checked, 0 failures"


def test_verify():
    code, out, _ = invoke("verify", "Gr(2,4)", "duality")
    assert code == 0
    assert out.strip() == "36 pairs checked, 0 failures"


def test_verify_json_summary():
    code, out, _ = invoke("verify", "LG(3)", "branch", "--format", "json", "--jobs", "2")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert lines == [{"space": "LG(3)", "suite": "branch", "checked": 8, "failures": 0,
                      "message": "8 shapes checked, 0 failures"}]


def test_chev_prints_both_forms():
    code, out, _ = invoke("chev", "LG(4)", "[3,2]", "--quantum")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 2
    assert lines[1].startswith("= ")
    assert "Iq^[3,2]" in lines[1]


@pytest.mark.parametrize("argv", [
    ("poset", "Gr(5,3)"),
    ("poset", "P(3)"),
    ("ideal", "Gr(2,4)", "[3]"),
    ("ideal", "Gr(2,4)", "[1,2]"),
    ("verify", "LG(3)", "detq"),
    ("detq", "2", "4", "[x]"),
    ("nonexistent",),
    (),
])
def test_usage_errors(argv):
    code, _, _ = invoke(*argv)
    assert code == 2


def test_domain_error_prints_usage():
    code, _, err = invoke("ideal", "Gr(2,4)", "[3]")
    assert code == 2
    assert "usage" in err


def test_help_exits_cleanly():
    assert invoke("--help")[0] == 0


def test_invariant_error_exits_with_failure(monkeypatch):
    def broken(*args, **kwargs):
        raise InvariantError("tabela inconsistente")

    monkeypatch.setattr(structure.CalculationService, "calcular_distancia", broken)
    code, _, err = invoke("dist", "Gr(2,4)", "[1]", "[]")
    assert code == 1
    assert "tabela inconsistente" in err
