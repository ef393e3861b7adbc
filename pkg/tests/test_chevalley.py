import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chevalg._reference import GENERATOR_WORDS
from chevalg.chevalley import (
    LieElement,
    build_structure_table,
    dump_table,
    jacobi_check,
    load_table,
    n_slots,
    nested_bracket,
    verify_serre,
    x_slot,
    y_slot,
)
from chevalg.root_system import CartanType, build_root_system


def _own_gens(rs):
    return [
        (
            LieElement.h_basis(rs, i),
            LieElement.x_basis(rs, i),
            LieElement.y_basis(rs, i),
        )
        for i in range(1, rs.rank + 1)
    ]


def test_cartan_relations(e8_rs, e8_table):
    x1 = LieElement.x_basis(e8_rs, 1)
    y1 = LieElement.y_basis(e8_rs, 1)
    assert e8_table.bracket(x1, y1) == LieElement.h_basis(e8_rs, 1)
    # [X_i, Y_j] = 0 off the diagonal of simple generators
    assert not e8_table.bracket(x1, LieElement.y_basis(e8_rs, 2))


def test_simple_pair_brackets(e8_rs, e8_table):
    x1 = LieElement.x_basis(e8_rs, 1)
    x2 = LieElement.x_basis(e8_rs, 2)
    x3 = LieElement.x_basis(e8_rs, 3)
    assert not e8_table.bracket(x1, x2)  # no edge between nodes 1 and 2
    b = e8_table.bracket(x1, x3)
    assert set(b.coeffs) == {x_slot(e8_rs, 9)}
    assert abs(b.coeffs[x_slot(e8_rs, 9)]) == 1


def test_all_constants_unit(e8_table, d7_table):
    # simply laced strings have p = 0, so |N| = 1 throughout
    for t in (e8_table, d7_table):
        assert all(abs(c) == 1 for c in t.n.values())
        assert all(t.n[(j, i)] == -t.n[(i, j)] for (i, j) in t.n)


def test_bracket_h_action(e8_rs, e8_table):
    for i in (1, 4, 8):
        h = LieElement.h_basis(e8_rs, i)
        for r in (5, 47, 120):
            xr = LieElement.x_basis(e8_rs, r)
            w = e8_rs.root_weight(r)[i - 1]
            assert e8_table.bracket(h, xr) == w * xr
            assert e8_table.bracket(h, LieElement.y_basis(e8_rs, r)) == (
                -w
            ) * LieElement.y_basis(e8_rs, r)


def test_bracket_self_and_mismatch(e8_rs, d7_rs, e8_table):
    x = LieElement.from_parts(e8_rs, x={1: 2, 47: Fraction(1, 3)}, h={2: -1})
    assert not e8_table.bracket(x, x)
    with pytest.raises(ValueError):
        e8_table.bracket(x, LieElement.x_basis(d7_rs, 1))


def test_nested_bracket_basics(e8_rs, e8_table):
    assert nested_bracket(e8_table, "X", [1]) == LieElement.x_basis(e8_rs, 1)
    assert nested_bracket(e8_table, "Y", [3]) == LieElement.y_basis(e8_rs, 3)
    b = nested_bracket(e8_table, "X", [4, 5])
    assert set(b.coeffs) == {x_slot(e8_rs, 12)}
    assert abs(b.coeffs[x_slot(e8_rs, 12)]) == 1
    assert not nested_bracket(e8_table, "X", [1, 2])


def test_nested_bracket_generator_words(e8_rs, e8_table):
    for name, (kind, word, target) in GENERATOR_WORDS.items():
        e = nested_bracket(e8_table, kind, word)
        slot = (
            x_slot(e8_rs, target) if kind == "X" else y_slot(e8_rs, target)
        )
        assert set(e.coeffs) == {slot}, name
        c = e.coeffs[slot]
        assert c != 0 and Fraction(c).denominator == 1


def test_nested_bracket_errors(e8_table):
    with pytest.raises(IndexError):
        nested_bracket(e8_table, "X", [9])
    with pytest.raises(ValueError):
        nested_bracket(e8_table, "X", [])
    with pytest.raises(ValueError):
        nested_bracket(e8_table, "Z", [1])


def test_serre_own_generators(e8_rs, e8_table, d7_rs, d7_table):
    rep = verify_serre(e8_table, e8_rs.cartan_matrix, _own_gens(e8_rs))
    assert rep.ok
    rep = verify_serre(d7_table, d7_rs.cartan_matrix, _own_gens(d7_rs))
    assert rep.ok


def test_serre_power_relation_instance(e8_rs, e8_table):
    # (ad X_1)^{1-M_21}(X_2) = [X_1, X_2] = 0
    assert e8_rs.cartan_matrix[1][0] == 0
    x1 = LieElement.x_basis(e8_rs, 1)
    x2 = LieElement.x_basis(e8_rs, 2)
    assert not e8_table.bracket(x1, x2)


def test_serre_detects_corruption(e8_rs, e8_table):
    gens = _own_gens(e8_rs)
    gens[0], gens[1] = (
        (gens[0][0], gens[1][1], gens[0][2]),
        (gens[1][0], gens[0][1], gens[1][2]),
    )
    rep = verify_serre(e8_table, e8_rs.cartan_matrix, gens)
    assert not rep.ok and rep.failures


def test_jacobi_exhaustive_small():
    rs = build_root_system(CartanType("D", 4))
    t = build_structure_table(rs)
    rep = jacobi_check(t, exhaustive=True)
    assert rep.ok and rep.checked == n_slots(rs) ** 3


def test_jacobi_detects_corruption(e8_rs, e8_table):
    from chevalg.chevalley import StructureTable

    bad_n = dict(e8_table.n)
    key = (1, 3)
    bad_n[key] = -bad_n[key]  # break one sign without breaking antisymmetry pairs
    bad = StructureTable(e8_rs, bad_n)
    rep = jacobi_check(bad, exhaustive=False, samples=200_000, seed=11)
    assert not rep.ok
    assert rep.failures


def _random_elem(rng, rs, fractions=False):
    coeffs = {}
    for _ in range(rng.randint(1, 4)):
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        if fractions and rng.random() < 0.3:
            c = Fraction(c, rng.choice([2, 3]))
        coeffs[rng.randrange(n_slots(rs))] = c
    return LieElement(rs, coeffs)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_bracket_bilinear_antisymmetric(seed):
    rs = build_root_system(CartanType("A", 3))
    t = build_structure_table(rs)
    rng = random.Random(seed)
    x = _random_elem(rng, rs, fractions=True)
    y = _random_elem(rng, rs, fractions=True)
    z = _random_elem(rng, rs, fractions=True)
    assert t.bracket(x, y) + t.bracket(y, x) == LieElement.zero(rs)
    assert t.bracket(x + y, z) == t.bracket(x, z) + t.bracket(y, z)
    c = Fraction(3, 7)
    assert t.bracket(c * x, y) == c * t.bracket(x, y)
    jac = (
        t.bracket(t.bracket(x, y), z)
        + t.bracket(t.bracket(y, z), x)
        + t.bracket(t.bracket(z, x), y)
    )
    assert not jac


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=6))
def test_nested_bracket_integer_coefficient(word):
    rs = build_root_system(CartanType("D", 4))
    t = build_structure_table(rs)
    e = nested_bracket(t, "X", word)
    assert len(e.coeffs) <= 1
    for c in e.coeffs.values():
        assert Fraction(c).denominator == 1


def test_element_parts_and_str(e8_rs):
    e = LieElement.from_parts(
        e8_rs, h={1: 1}, x={47: Fraction(3, 2)}, y={2: -1}
    )
    assert e.h_part == {1: 1}
    assert e.x_part == {47: Fraction(3, 2)}
    assert e.y_part == {2: -1}
    assert str(e) == "1*H[1] + 3/2*X[47] - 1*Y[2]"
    assert str(LieElement.zero(e8_rs)) == "0"
    assert str(-LieElement.h_basis(e8_rs, 1)) == "-1*H[1]"


def test_element_index_validation(e8_rs):
    with pytest.raises(IndexError):
        LieElement.h_basis(e8_rs, 9)
    with pytest.raises(IndexError):
        LieElement.x_basis(e8_rs, 121)
    with pytest.raises(IndexError):
        LieElement.from_parts(e8_rs, y={0: 1})


def test_dump_load_round_trip(d7_table):
    text = dump_table(d7_table)
    loaded = load_table(text)
    assert loaded.n == d7_table.n
    assert dump_table(loaded) == text
    assert text.splitlines()[0] == "CHEVALLEY v1 D7"


def test_loaded_table_brackets_match(e8_rs, e8_table):
    loaded = load_table(dump_table(e8_table))
    rng = random.Random(5)
    for _ in range(50):
        x = _random_elem(rng, e8_rs)
        y = _random_elem(rng, e8_rs)
        assert loaded.bracket(x, y) == e8_table.bracket(x, y)


def test_load_rejects_garbage():
    with pytest.raises(ValueError):
        load_table("")
    with pytest.raises(ValueError):
        load_table("WRONG v1 E8\n")
    with pytest.raises(ValueError):
        load_table("CHEVALLEY v1 E8\nN 1 3 5 1\n")  # wrong sum index
