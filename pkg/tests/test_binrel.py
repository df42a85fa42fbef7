import itertools

from hypothesis import given, strategies as st

from singmon.binrel import (BoolMat, b_bold_generator, b_generator, bold_generator,
                            complete_components, eta_b_eval, eta_eval, is_rotation_invariant,
                            perm_matrix, point_index, signed_pairs, transposition)
from singmon.coxeter import CoxeterGroup, Perm
from singmon.words import parse_word

J2 = BoolMat.from_lists([[1, 1], [1, 1]])


def test_products():
    a = BoolMat.from_lists([[1, 0, 1], [0, 1, 0], [1, 1, 0]])
    assert BoolMat.identity(3) * a == a == a * BoolMat.identity(3)
    assert bold_generator(2, 1) * bold_generator(2, 1) == J2


def test_product_matches_definition():
    a = BoolMat.from_lists([[1, 0, 1], [0, 0, 1], [1, 1, 0]])
    b = BoolMat.from_lists([[0, 1, 0], [1, 0, 0], [0, 1, 1]])
    prod = a * b
    for i, k in itertools.product(range(3), repeat=2):
        assert prod[i, k] == any(a[i, j] and b[j, k] for j in range(3))


def test_essential():
    m = BoolMat.from_lists([[1, 0, 0, 1], [0, 0, 1, 1], [1, 1, 0, 0], [0, 0, 1, 1]])
    assert m.is_essential()
    assert not BoolMat.zero(3).is_essential()
    assert BoolMat.identity(3).is_essential()
    assert not BoolMat.from_lists([[1, 1], [0, 0]]).is_essential()


def test_generators():
    assert bold_generator(2, 1) == J2
    assert transposition(2, 1) == BoolMat.from_lists([[0, 1], [1, 0]])
    expected = BoolMat.identity(4) | signed_pairs(2, [(1, -1), (-1, 1)])
    assert b_bold_generator(2, 0) == expected
    assert b_generator(2, 0) * b_generator(2, 0) == BoolMat.identity(4)
    assert point_index(2, -2) == 0 and point_index(2, 1) == 2


def test_eta_examples():
    assert eta_eval(parse_word("s1"), 3) == transposition(3, 1)
    assert eta_eval((), 3) == BoolMat.identity(3)
    a, b = eta_eval(parse_word("t1 t2"), 3), eta_eval(parse_word("t2 t1"), 3)
    assert a != b
    assert complete_components(a) == complete_components(b)


def test_three_fold_product_is_already_complete():
    a = eta_eval(parse_word("t1 t2 t1"), 3)
    assert a == eta_eval(parse_word("t2 t1 t2"), 3) == BoolMat.from_lists([[1] * 3] * 3)


def test_complete_components_examples():
    s1 = bold_generator(3, 1)
    assert complete_components(s1) == s1
    assert complete_components(BoolMat.from_pairs(2, [(0, 1), (1, 0), (1, 1)])) == J2
    assert complete_components(BoolMat.zero(3)) == BoolMat.zero(3)


def test_perm_matrix_matches_perm_product():
    G = CoxeterGroup("A", 4)
    els = G.elements()
    for a in els[::3]:
        for b in els[::5]:
            assert perm_matrix(a * b) == perm_matrix(a) * perm_matrix(b)  # type: ignore[arg-type]


def test_essential_products_exhaustive_n2():
    mats = [BoolMat(2, (r0, r1)) for r0 in range(4) for r1 in range(4)]
    ess = [m for m in mats if m.is_essential()]
    assert len(ess) == 7
    for a in ess:
        for b in ess:
            assert (a * b).is_essential()


@st.composite
def essential(draw, n=None):
    n = n or draw(st.integers(1, 6))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n))
    return BoolMat(n, tuple(rows)) | perm_matrix(Perm(tuple(draw(st.permutations(range(1, n + 1))))))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(essential(n), essential(n), essential(n))))
def test_congruence_and_associativity(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert (a * b).is_essential()
    assert complete_components(a * b) == complete_components(complete_components(a) * complete_components(b))


@given(essential())
def test_completion_idempotent_and_extensive(a):
    c = complete_components(a)
    assert complete_components(c) == c
    assert all(c[i, j] for i, j in a.pairs())


@given(st.integers(2, 3).flatmap(lambda n: st.lists(
    st.sampled_from([f"s{i}" for i in range(n)] + [f"t{i}" for i in range(n)]), max_size=10).map(
        lambda ls: (n, " ".join(ls) or "e"))))
def test_type_b_images_are_rotation_invariant(nw):
    n, text = nw
    m = eta_b_eval(parse_word(text), n)
    assert is_rotation_invariant(m) and m.is_essential()
