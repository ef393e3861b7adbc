import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from chevalg._reference import SPINOR_MODULE_INDICES
from chevalg.chevalley import n_slots, x_slot
from chevalg.exact_linalg import SpanBasis, kernel_combinations, span_contains, span_insert


def test_insert_idempotent():
    b = SpanBasis()
    v = {0: 1, 3: Fraction(2, 3)}
    b, new = b.insert(v)
    assert new and b.dim == 1
    b2, new = b.insert(v)
    assert not new and b2.dim == 1


def test_full_space(e8_rs):
    b = SpanBasis()
    for s in range(n_slots(e8_rs)):
        b, new = b.insert({s: 1})
        assert new
    assert b.dim == 248
    b, new = b.insert({5: Fraction(7, 2), 100: -3})
    assert not new


def test_spinor_module_vectors(e8_rs):
    b = SpanBasis()
    for i in SPINOR_MODULE_INDICES:
        b, _ = b.insert({x_slot(e8_rs, i): 1})
    assert b.dim == 64
    b2, new = b.insert({x_slot(e8_rs, 47): 1})
    assert not new  # root 47 is one of the listed vectors
    assert not b.contains({x_slot(e8_rs, 2): 1})  # root 2 is not


def test_contains_zero():
    assert SpanBasis().contains({})
    b, _ = SpanBasis().insert({2: 5})
    assert b.contains({})


def test_row_invariants():
    rng = random.Random(3)
    b = SpanBasis()
    for _ in range(12):
        v = {rng.randrange(8): rng.randint(-4, 4) for _ in range(3)}
        b, _ = b.insert(v)
    pivots = b.pivots()
    assert list(pivots) == sorted(pivots)
    rows = b.row_vectors()
    for p, r in zip(pivots, rows):
        assert min(r) == p and r[p] == 1
        for q in pivots:
            if q != p:
                assert q not in r


def test_functional_inserts_do_not_mutate():
    b0 = SpanBasis()
    b1, _ = b0.insert({0: 1, 1: 1})
    b2, _ = b1.insert({1: 1})
    assert b0.dim == 0 and b1.dim == 1 and b2.dim == 2
    assert b1.row_vectors() == [{0: 1, 1: 1}]


small_vectors = st.lists(
    st.dictionaries(st.integers(0, 10), st.integers(-5, 5), max_size=4),
    min_size=1,
    max_size=8,
)


@settings(max_examples=150, deadline=None)
@given(small_vectors, st.randoms(use_true_random=False))
def test_insertion_order_invariance(vecs, rnd):
    b1 = SpanBasis().insert_all(vecs)
    shuffled = list(vecs)
    rnd.shuffle(shuffled)
    b2 = SpanBasis().insert_all(shuffled)
    assert b1.dim == b2.dim
    for v in vecs:
        assert b1.contains(v) == b2.contains(v)
    # fully reduced bases of the same subspace are identical
    assert b1 == b2


def test_module_level_helpers():
    b, new = span_insert(SpanBasis(), {1: 2})
    assert new and span_contains(b, {1: Fraction(1, 7)})


def test_kernel_combinations_known():
    rows = [{0: 1, 1: 1}, {0: 2, 1: 2}, {1: 1}]
    combos = kernel_combinations(rows)
    assert len(combos) == 1
    combo = combos[0]
    acc = {}
    for j, c in combo.items():
        for s, v in rows[j].items():
            acc[s] = acc.get(s, 0) + c * v
    assert all(v == 0 for v in acc.values())
    assert combo[1] == 1  # tail coefficient of the defining row


@settings(max_examples=100, deadline=None)
@given(small_vectors)
def test_kernel_combinations_property(rows):
    combos = kernel_combinations(rows)
    rank = SpanBasis().insert_all(rows).dim
    assert len(combos) == len(rows) - rank
    for combo in combos:
        acc = {}
        for j, c in combo.items():
            for s, v in rows[j].items():
                acc[s] = acc.get(s, 0) + c * v
        assert all(v == 0 for v in acc.values())
