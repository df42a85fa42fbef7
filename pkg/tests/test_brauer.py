import random

import pytest
from hypothesis import given, settings, strategies as st

from singmon.brauer import (BrauerBDiagram, BrauerDiagram, ColoredPartialBrauer, ScalarExponents,
                            all_brauer, all_brauer_b, all_colored_partial_brauer, b_cup_cap,
                            b_reflection, brauer_b_from_pairs, brauer_b_identity,
                            brauer_from_blocks, brauer_identity, chi_b_eval, chi_eval,
                            colored_from_blocks, colored_identity, cup_cap, brauer_size,
                            from_apb, normal_form, perm_diagram, redundancy_chain,
                            signed_perm_diagram, to_apb)
from singmon.coxeter import CoxeterGroup, Perm, SignedPerm
from singmon.verify import count_oracle
from singmon.words import parse_word


def test_validation():
    with pytest.raises(ValueError):
        BrauerDiagram(1, (0, 1))
    with pytest.raises(ValueError):
        brauer_b_from_pairs(1, [(-1, "1'"), (1, "1'")], complete=False)
    with pytest.raises(ValueError):
        ColoredPartialBrauer(1, (0, 1), (1, 0))


def test_worked_gluing_example():
    a = brauer_from_blocks(3, [(1, 2), (3, "3'"), ("1'", "2'")])
    b = brauer_from_blocks(3, [(1, 2), (3, "1'"), ("2'", "3'")])
    d, ex = a.compose(b)
    assert d == b
    assert ex == ScalarExponents((1, 0), 0)


def test_identity_and_idempotent_loop():
    d = cup_cap(3, 1)
    assert brauer_identity(3) * d == d == d * brauer_identity(3)
    sq, ex = d.compose(d)
    assert sq == d and ex.closed == 1


def test_chi_examples():
    assert chi_eval(parse_word("s1"), 3)[0] == perm_diagram(Perm((2, 1, 3)))
    assert chi_eval(parse_word("S1"), 3)[0] == perm_diagram(Perm((2, 1, 3)))
    assert chi_eval(parse_word("t1 t2 t1"), 3)[0] == chi_eval(parse_word("t1"), 3)[0]
    assert chi_b_eval(parse_word("t0"), 2)[0] == b_cup_cap(2, 0)


def test_perm_diagram_is_homomorphism():
    G = CoxeterGroup("A", 4)
    els = G.elements()
    rng = random.Random(1)
    for _ in range(100):
        u, v = rng.choice(els), rng.choice(els)
        assert perm_diagram(u * v) == perm_diagram(u) * perm_diagram(v)  # type: ignore[arg-type,operator]


def test_signed_perm_diagram_is_homomorphism():
    els = CoxeterGroup("B", 3).elements()
    rng = random.Random(2)
    for _ in range(100):
        u, v = rng.choice(els), rng.choice(els)
        assert signed_perm_diagram(u * v) == signed_perm_diagram(u) * signed_perm_diagram(v)  # type: ignore[arg-type,operator]


def test_partial_open_component():
    single = ColoredPartialBrauer(1, (0, 1))
    d, ex = single.compose(single)
    assert d == single and ex == ScalarExponents((0, 0), 1)


def test_colors_add_along_strands():
    one = ColoredPartialBrauer(1, (1, 0), (1, 1))
    d, ex = one.compose(one)
    assert d == colored_identity(1) and ex == ScalarExponents()


def test_loop_color_is_recorded():
    a = colored_from_blocks(2, [([1, 2], 0), (["1'", "2'"], 1)])
    b = colored_from_blocks(2, [([1, 2], 0), (["1'", "2'"], 0)])
    _, ex = a.compose(b)
    assert ex.by_color == (0, 1) and ex.open == 0


def test_uncolored_embedding_matches_brauer():
    els = all_brauer(3)
    rng = random.Random(3)
    for _ in range(200):
        a, b = rng.choice(els), rng.choice(els)
        d, ex = a.compose(b)
        c, cex = ColoredPartialBrauer(3, a.match).compose(ColoredPartialBrauer(3, b.match))
        assert c == ColoredPartialBrauer(3, d.match)
        assert cex == ScalarExponents((ex.closed, 0), 0)


def test_type_b_examples():
    s0, s1 = b_cup_cap(2, 0), b_cup_cap(2, 1)
    sq, ex = s0.compose(s0)
    assert sq == s0 and ex.closed == 1
    assert s1 * s0 * s1 == s1
    assert brauer_b_identity(2) * s0 == s0


def test_foreign_relation_fails():
    lhs = chi_b_eval(parse_word("s0 s1 t0"), 2)[0]
    rhs = chi_b_eval(parse_word("s1 t0"), 2)[0]
    assert lhs != rhs


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_brauer_count(n):
    assert len(all_brauer(n)) == brauer_size(n) == count_oracle("BR", n)


def test_brauer_size_values():
    assert [brauer_size(k) for k in (1, 2, 3, 4, 5)] == [1, 3, 15, 105, 945]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_brauer_b_count_matches_colored_count(n):
    assert len(all_brauer_b(n)) == count_oracle("APB", n)
    assert len(all_colored_partial_brauer(n)) == count_oracle("APB", n)


def test_defects():
    d = b_cup_cap(1, 0)
    assert d.left_defect() == {1} and d.right_defect() == {1}
    e = brauer_b_identity(3)
    assert e.left_defect() == e.right_defect() == frozenset()
    assert normal_form(e) == (e, SignedPerm((1, 2, 3)), e)


@pytest.mark.parametrize("n", [1, 2])
def test_normal_form_recomposes(n):
    for d in all_brauer_b(n):
        el, sigma, er = normal_form(d)
        assert el * signed_perm_diagram(sigma) * er == d
        assert el * el == el and er * er == er


def test_apb_displayed_example():
    d = brauer_b_from_pairs(4, [(-4, "4'"), (4, "-4'"), (-3, -2), (-1, 1),
                                ("-1'", "1'"), ("2'", "3'")])
    expected = colored_from_blocks(4, [([2, 3], 0), ([4, "4'"], 1), (["2'", "3'"], 0)])
    assert to_apb(d) == expected
    assert from_apb(expected) == d
    assert to_apb(brauer_b_identity(3)) == colored_identity(3)


def test_apb_roundtrip_and_homomorphism_n2():
    els = all_brauer_b(2)
    assert {to_apb(d) for d in els} == set(all_colored_partial_brauer(2))
    for d in els:
        assert from_apb(to_apb(d)) == d
    for a in els:
        for b in els:
            assert to_apb(a * b) == to_apb(a) * to_apb(b)


def test_redundancy_chain_is_a_chain_of_equalities():
    for i in (1, 2):
        images = [chi_eval(w, 4)[0] for w in redundancy_chain(i)]
        assert all(x == images[0] for x in images)


def _triples(pool):
    return st.tuples(st.sampled_from(pool), st.sampled_from(pool), st.sampled_from(pool))


BR4 = all_brauer(4)
BRB2 = all_brauer_b(2)
APB2 = all_colored_partial_brauer(2)


@settings(max_examples=60)
@given(st.one_of(_triples(BR4), _triples(BRB2), _triples(APB2)))
def test_associativity_with_exponents(t):
    a, b, c = t
    ab, e1 = a.compose(b)
    left, e2 = ab.compose(c)
    bc, e3 = b.compose(c)
    right, e4 = a.compose(bc)
    assert left == right
    assert e1 + e2 == e3 + e4
