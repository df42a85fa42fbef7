import functools

import pytest
from hypothesis import given, settings, strategies as st

from singmon.binrel import BoolMat, eta_eval, perm_matrix
from singmon.coxeter import CoxeterGroup, odd_components
from singmon.groupalg import (BoolGroupAlgElt, IntGroupAlgElt, bool_delta_assignment,
                              bool_delta_eval, collision_scan, delta_bar_assignment,
                              delta_bar_eval)
from singmon.laurent import PhiAssignment, PhiSet, XPoly, parse_xpoly
from singmon.verify import check_relations
from singmon.words import alphabet, parse_word, random_words, singular_relations


def uniform(G, p):
    return PhiAssignment.uniform(p, len(odd_components(G.matrix())))


def test_delta_bar_linear_parameter():
    G = CoxeterGroup("A", 3)
    e, s = G.identity(), G.generator(1)
    assert delta_bar_eval(parse_word("t1"), G, uniform(G, "2 + 5x")) == IntGroupAlgElt.make({e: 2, s: 5})
    assert delta_bar_eval(parse_word("t1"), G, uniform(G, "x - x^-1")).is_zero()
    assert delta_bar_eval(parse_word("s1 s1"), G, uniform(G, "x")) == IntGroupAlgElt.make({e: 1})


def test_delta_bar_parity_folding():
    # x^i collapses to s^(i mod 2)
    G = CoxeterGroup("I2", 5)
    e, s = G.identity(), G.generator(2)
    img = delta_bar_eval(parse_word("t2"), G, uniform(G, "x^4 + 3x^-3 - 2x^2"))
    assert img == IntGroupAlgElt.make({e: -1, s: 3})


def test_delta_bar_rejects_v():
    G = CoxeterGroup("A", 3)
    with pytest.raises(ValueError):
        delta_bar_eval(parse_word("t1"), G, uniform(G, "v + x"))


def test_bool_examples():
    G = CoxeterGroup("A", 3)
    e, s = G.identity(), G.generator(1)
    phi = PhiSet.uniform({0, 1}, 1)
    assert bool_delta_eval(parse_word("t1"), G, phi).elements == {e, s}
    assert bool_delta_eval(parse_word("t1 t1"), G, phi).elements == {e, s}
    assert bool_delta_eval(parse_word("t1"), G, PhiSet.uniform({1}, 1)).elements == {s}
    assert bool_delta_eval(parse_word("t1"), G, PhiSet.uniform({3, 5}, 1)).elements == {s}


@pytest.mark.parametrize("n", [3, 4])
def test_bool_matches_binary_relations(n):
    G = CoxeterGroup("A", n)
    phi = PhiSet.uniform({0, 1}, 1)
    for w in random_words(alphabet(G.matrix()), 8, 100, n):
        img = bool_delta_eval(w, G, phi)
        union = functools.reduce(BoolMat.__or__, (perm_matrix(x) for x in img.elements))  # type: ignore[arg-type]
        assert union == eta_eval(w, n)


INT_PHIS = ["x", "x - x^-1", "1 + x", "2 - 3x^2 + x^5", "x^-1", "4", "1 + x + x^2"]
SET_PHIS = [{0}, {1}, {0, 1}, {2, 3, -1}]
GROUPS = [("A", 4), ("B", 3), ("I2", 3), ("I2", 4), ("I2", 5), ("I2", 6)]


@pytest.mark.parametrize("family,n", GROUPS)
def test_relations_hold(family, n):
    G = CoxeterGroup(family, n)
    rels = singular_relations(G.matrix())
    for p in INT_PHIS:
        assert check_relations(rels, delta_bar_assignment(G, uniform(G, p))).ok
    for S in SET_PHIS:
        phi = PhiSet.uniform(S, len(odd_components(G.matrix())))
        assert check_relations(rels, bool_delta_assignment(G, phi)).ok


def test_relations_hold_with_distinct_component_values():
    G = CoxeterGroup("B", 3)
    rels = singular_relations(G.matrix())
    phi = PhiAssignment((parse_xpoly("1 + x"), parse_xpoly("x - x^-1")))
    assert check_relations(rels, delta_bar_assignment(G, phi)).ok
    assert check_relations(rels, bool_delta_assignment(G, PhiSet((frozenset({0}), frozenset({0, 1}))))).ok


@settings(max_examples=40)
@given(st.lists(st.sampled_from(["s1", "s2", "t1", "t2", "S1"]), max_size=6),
       st.lists(st.sampled_from(["s1", "s2", "t1", "t2", "S2"]), max_size=6))
def test_delta_bar_is_multiplicative(a, b):
    G = CoxeterGroup("I2", 4)
    phi = uniform(G, "1 + 2x")
    u, w = parse_word(" ".join(a)), parse_word(" ".join(b))
    assert delta_bar_eval(u + w, G, phi) == delta_bar_eval(u, G, phi) * delta_bar_eval(w, G, phi)


def test_collision_scan():
    G = CoxeterGroup("A", 3)
    words = [parse_word(t) for t in ("t1", "t1 t1", "s1", "t1 s1")]
    groups = collision_scan(words, lambda w: bool_delta_eval(w, G, PhiSet.uniform({0, 1}, 1)))
    assert groups == [["t1", "t1 t1", "t1 s1"]]
