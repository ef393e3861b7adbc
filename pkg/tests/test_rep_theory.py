import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chevalg.rep_theory import (
    freudenthal_character,
    fundamental_weight,
    tensor_decompose,
    tensor_oracle,
    weyl_dim,
    weyl_orbit,
)
from chevalg.root_system import CartanType, build_root_system


def l7(d7_rs, i):
    return fundamental_weight(d7_rs, i)


def test_weyl_dim_fundamentals(d7_rs):
    dims = [weyl_dim(d7_rs, fundamental_weight(d7_rs, i)) for i in range(1, 8)]
    assert dims == [14, 91, 364, 1001, 2002, 64, 64]


def test_weyl_dim_trivial(d7_rs, e8_rs):
    assert weyl_dim(d7_rs, (0,) * 7) == 1
    assert weyl_dim(e8_rs, (0,) * 8) == 1
    assert weyl_dim(e8_rs, fundamental_weight(e8_rs, 8)) == 248


def test_weyl_dim_two_lambda6(d7_rs):
    # cross-check against the tensor-square dimension count
    others = sum(
        weyl_dim(d7_rs, fundamental_weight(d7_rs, i)) for i in (5, 3, 1)
    )
    assert weyl_dim(d7_rs, tuple(2 * c for c in fundamental_weight(d7_rs, 6))) == 4096 - others


def test_weyl_dim_rejects_non_dominant(d7_rs):
    with pytest.raises(ValueError):
        weyl_dim(d7_rs, (1, -1, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        weyl_dim(d7_rs, (1, 0, 0))


def test_character_trivial(d7_rs):
    assert freudenthal_character(d7_rs, (0,) * 7) == {(0,) * 7: 1}


def test_character_vector_rep(d7_rs):
    char = freudenthal_character(d7_rs, fundamental_weight(d7_rs, 1))
    assert len(char) == 14
    assert all(m == 1 for m in char.values())


def test_character_adjoint(d7_rs):
    char = freudenthal_character(d7_rs, fundamental_weight(d7_rs, 2))
    assert sum(char.values()) == 91
    assert char[(0,) * 7] == 7  # zero weight multiplicity equals the rank
    # nonzero weights are exactly the 84 roots, multiplicity one
    assert sum(1 for w, m in char.items() if w != (0,) * 7 and m == 1) == 84


def test_character_total_mass(d7_rs):
    for lam in [
        fundamental_weight(d7_rs, 6),
        fundamental_weight(d7_rs, 5),
        (1, 1, 0, 0, 0, 0, 0),
    ]:
        char = freudenthal_character(d7_rs, lam)
        assert sum(char.values()) == weyl_dim(d7_rs, lam)


def test_character_weyl_symmetric(d7_rs):
    char = freudenthal_character(d7_rs, (1, 0, 0, 0, 0, 1, 0))
    for w, m in char.items():
        for i in range(1, 8):
            assert char[d7_rs.reflect(w, i)] == m


def test_spinor_orbit_size(d7_rs):
    assert len(weyl_orbit(d7_rs, fundamental_weight(d7_rs, 6))) == 64


def test_tensor_square_spinors(d7_rs):
    l = lambda i: fundamental_weight(d7_rs, i)
    expected6 = {
        tuple(2 * c for c in l(6)): 1,
        l(5): 1,
        l(3): 1,
        l(1): 1,
    }
    dec = tensor_decompose(d7_rs, l(6), l(6))
    assert dec == expected6
    dec7 = tensor_decompose(d7_rs, l(7), l(7))
    assert dec7 == {
        tuple(2 * c for c in l(7)): 1,
        l(5): 1,
        l(3): 1,
        l(1): 1,
    }
    for d in (dec, dec7):
        assert sum(weyl_dim(d7_rs, w) * m for w, m in d.items()) == 4096
        assert l(6) not in d and l(7) not in d and l(2) not in d
        assert not {64, 91} & {weyl_dim(d7_rs, w) for w in d}


def test_tensor_with_trivial(d7_rs):
    lam = (0, 1, 0, 0, 0, 0, 1)
    assert tensor_decompose(d7_rs, lam, (0,) * 7) == {lam: 1}
    assert tensor_oracle(d7_rs, (0,) * 7, (0,) * 7) == {(0,) * 7: 1}


def test_tensor_a2():
    a2 = build_root_system(CartanType("A", 2))
    assert tensor_decompose(a2, (1, 0), (0, 1)) == {(1, 1): 1, (0, 0): 1}


def test_tensor_a1_adjoint_square():
    a1 = build_root_system(CartanType("A", 1))
    dec = tensor_oracle(a1, (2,), (2,))
    assert dec == {(4,): 1, (2,): 1, (0,): 1}
    assert [weyl_dim(a1, w) for w in sorted(dec, reverse=True)] == [5, 3, 1]
    assert tensor_decompose(a1, (2,), (2,)) == dec


def test_oracle_equals_klimyk_spinor_square(d7_rs):
    l6 = fundamental_weight(d7_rs, 6)
    assert tensor_oracle(d7_rs, l6, l6) == tensor_decompose(d7_rs, l6, l6)


def test_oracle_rejects_oversize(d7_rs):
    l2 = fundamental_weight(d7_rs, 2)
    l5 = fundamental_weight(d7_rs, 5)
    with pytest.raises(ValueError):
        tensor_oracle(d7_rs, l2, l5, product_limit=100_000)


small_weight = st.tuples(st.integers(0, 2), st.integers(0, 2))


@settings(max_examples=30, deadline=None)
@given(small_weight, small_weight)
def test_tensor_sum_rule_and_oracle_a2(lam, mu):
    a2 = build_root_system(CartanType("A", 2))
    dec = tensor_decompose(a2, lam, mu)
    total = sum(weyl_dim(a2, w) * m for w, m in dec.items())
    assert total == weyl_dim(a2, lam) * weyl_dim(a2, mu)
    assert dec == tensor_oracle(a2, lam, mu)


@settings(max_examples=10, deadline=None)
@given(
    st.tuples(*(st.integers(0, 1) for _ in range(4))),
    st.tuples(*(st.integers(0, 1) for _ in range(4))),
)
def test_tensor_sum_rule_d4(lam, mu):
    d4 = build_root_system(CartanType("D", 4))
    dec = tensor_decompose(d4, lam, mu)
    total = sum(weyl_dim(d4, w) * m for w, m in dec.items())
    assert total == weyl_dim(d4, lam) * weyl_dim(d4, mu)
