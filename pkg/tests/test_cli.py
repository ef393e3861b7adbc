import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chevalg._reference import E8_POSITIVE_ROOTS
from chevalg.chevalley import LieElement, n_slots
from chevalg.cli import ExprError, main, parse_element, parse_expr
from chevalg.root_system import CartanType, build_root_system


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_roots_output(capsys):
    code, out, _ = run(capsys, "roots", "E8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ROOTS v1 E8"
    assert len(lines) == 121
    for idx, coeffs in enumerate(E8_POSITIVE_ROOTS, 1):
        assert lines[idx] == f"ROOT {idx} " + " ".join(map(str, coeffs))
    code2, out2, _ = run(capsys, "roots", "E8")
    assert out2 == out  # byte stable


def test_roots_bad_type(capsys):
    code, _, err = run(capsys, "roots", "Z9")
    assert code == 2 and "error" in err


def test_bracket_command(capsys):
    code, out, _ = run(capsys, "bracket", "E8", "X[1]", ",", "Y[1]")
    assert code == 0
    assert out.strip() == "1*H[1]"


def test_bracket_two_args(capsys):
    code, out, _ = run(capsys, "bracket", "E8", "X[1]", "X[3]")
    assert code == 0
    assert out.strip() == "1*X[9]"


def test_bracket_combination(capsys):
    code, out, _ = run(capsys, "bracket", "E8", "3/2*X[47] - Y[1]", ",", "H[1]")
    assert code == 0
    # [x, H_1] = -[H_1, x]; X_47 has first weight coordinate 1, Y_1 has -2
    assert out.strip() == "-3/2*X[47] - 2*Y[1]"


def test_nested_command(capsys):
    code, out, _ = run(
        capsys, "nested", "E8", "X", "4,5,6,7,8,2,3,4,5,6,7"
    )
    assert code == 0
    assert out.strip() == "1*X[74]"


def test_tensor_command(capsys):
    code, out, _ = run(capsys, "tensor", "D7", "0,0,0,0,0,1,0", "0,0,0,0,0,1,0")
    assert code == 0
    assert out.splitlines() == [
        "SUMMAND [0,0,0,0,1,0,0] mult=1 dim=2002",
        "SUMMAND [0,0,0,0,0,2,0] mult=1 dim=1716",
        "SUMMAND [0,0,1,0,0,0,0] mult=1 dim=364",
        "SUMMAND [1,0,0,0,0,0,0] mult=1 dim=14",
    ]


def test_submodule_command(capsys):
    code, out, _ = run(capsys, "submodule", "E8", "X[112]")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "SUBMODULE gen=X[112] dim=64 hw=[0,0,0,0,0,0,1]"
    assert lines[1].startswith("BASIS X[1] X[9] X[16]")


def test_decompose_command(capsys):
    code, out, _ = run(capsys, "decompose")
    assert code == 0
    heads = [l for l in out.splitlines() if l.startswith("SUBMODULE")]
    assert [h.split()[1] for h in heads] == [
        "gen=X74",
        "gen=X120",
        "gen=Y1",
        "gen=X112",
        "gen=Y97",
        "gen=H",
    ]
    assert "TOTAL dim=248 independent=True" in out


def test_verify_single_claim(capsys):
    code, out, _ = run(capsys, "verify", "--only", "root-table")
    assert code == 0
    assert out.splitlines()[0].startswith("CLAIM root-table PASS")
    assert out.splitlines()[-1] == "SUMMARY 1/1"


def test_verify_structured(capsys):
    code, out, _ = run(
        capsys, "verify", "--only", "long-bracket", "--format", "structured"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["claims"][0]["id"] == "long-bracket"
    assert doc["summary"]["passed"] == 1


def test_table_dump_and_load(capsys, tmp_path):
    code, out, _ = run(capsys, "table", "D7")
    assert code == 0
    assert out.splitlines()[0] == "CHEVALLEY v1 D7"
    path = tmp_path / "d7.table"
    path.write_text(out)
    code, out2, _ = run(
        capsys, "bracket", "D7", "--table", str(path), "X[1]", ",", "Y[1]"
    )
    assert code == 0 and out2.strip() == "1*H[1]"
    # loading a D7 table for an E8 command is an error
    code, _, err = run(
        capsys, "bracket", "E8", "--table", str(path), "X[1]", ",", "Y[1]"
    )
    assert code == 2 and "error" in err


def test_verify_with_table_file(capsys, tmp_path):
    code, out, _ = run(capsys, "table", "E8")
    assert code == 0
    path = tmp_path / "e8.table"
    path.write_text(out)
    code, out, _ = run(
        capsys, "verify", "--only", "long-bracket", "--table", str(path)
    )
    assert code == 0 and "SUMMARY 1/1" in out
    code, _, err = run(capsys, "verify", "--only", "no-such-id")
    assert code == 2 and "unknown claim id" in err


def test_parse_errors(capsys):
    code, _, err = run(capsys, "bracket", "E8", "X[1", ",", "Y[1]")
    assert code == 2 and "offset" in err
    code, _, err = run(capsys, "bracket", "E8", "X[999]", ",", "Y[1]")
    assert code == 2 and "out of range" in err
    code, _, err = run(capsys, "bracket", "E8", "X[9,9]", ",", "Y[1]")
    assert code == 2 and "exceeds the rank" in err
    code, _, err = run(capsys, "bracket", "E8", "Q[1]", ",", "Y[1]")
    assert code == 2


def test_parse_expr_offsets(e8_rs):
    with pytest.raises(ExprError) as exc:
        parse_expr("X[1] ? Y[2]", e8_rs)
    assert exc.value.offset == 5
    with pytest.raises(ExprError):
        parse_expr("H[1,2]", e8_rs)
    with pytest.raises(ExprError):
        parse_expr("1/0*X[1]", e8_rs)


def test_parse_element_values(e8_rs, e8_table):
    e = parse_element(e8_table, "3/2*X[47] - Y[1] + H[2]")
    assert e == LieElement.from_parts(
        e8_rs, h={2: 1}, x={47: Fraction(3, 2)}, y={1: -1}
    )
    assert parse_element(e8_table, "0") == LieElement.zero(e8_rs)
    word = "X[4,5,6,7,8,2,3,4,5,6,7]"
    e = parse_element(e8_table, word)
    assert e == LieElement.x_basis(e8_rs, 74)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_print_parse_round_trip(seed):
    rs = build_root_system(CartanType("E", 8))
    rng = random.Random(seed)
    coeffs = {}
    for _ in range(rng.randint(0, 5)):
        c = Fraction(
            rng.choice([-5, -3, -2, -1, 1, 2, 3, 5]), rng.choice([1, 2, 3, 4])
        )
        coeffs[rng.randrange(n_slots(rs))] = c
    elem = LieElement(rs, coeffs)
    expr = parse_expr(str(elem), rs)
    acc = LieElement.zero(rs)
    for coef, (kind, indices) in expr.terms:
        if kind == "H":
            acc = acc + coef * LieElement.h_basis(rs, indices[0])
        elif kind == "X":
            acc = acc + coef * LieElement.x_basis(rs, indices[0])
        else:
            acc = acc + coef * LieElement.y_basis(rs, indices[0])
    assert acc == elem
