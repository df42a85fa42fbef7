import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from singmon.binrel import BoolMat, eta_assignment, eta_eval
from singmon.brauer import all_brauer, brauer_identity, chi_assignment, chi_b_assignment
from singmon.coxeter import CoxeterGroup, standard_matrix
from singmon.dualsym import identity_bb, lambda_assignment, lambda_eval, perm_bb, pi_project, xi
from singmon.rook import phi_eval, upsilon_restrict
from singmon.verify import (check_commutes, check_relations, closure_of, count_oracle,
                            enumerate_closure, stirling2)
from singmon.words import GeneratorAssignment, alphabet, presentation, random_words, singular_relations


def test_relations_hold_under_eta():
    rep = check_relations(singular_relations(standard_matrix("A", 3)), eta_assignment(3))
    assert rep.ok and rep.total > 0


def test_type_b_brauer_relations():
    rep = check_relations(presentation("BRAUER_B", standard_matrix("B", 2)), chi_b_assignment(2))
    assert rep.ok


def test_zero_tau_is_absorbing_so_relations_hold():
    # every singular relation has one tau letter per side, so an absorbing image satisfies all
    good = eta_assignment(3)
    zero = BoolMat.zero(3)
    bad = GeneratorAssignment(good.sigma, good.sigma_inv, {i: zero for i in good.tau},
                              good.mul, good.identity)
    assert check_relations(singular_relations(standard_matrix("A", 3)), bad).ok


def test_negative_control_reports_failures():
    good = eta_assignment(3)
    taus = {i: BoolMat.from_pairs(3, [(i - 1, i - 1)]) for i in good.tau}
    bad = GeneratorAssignment(good.sigma, good.sigma_inv, taus, good.mul, good.identity)
    rep = check_relations(singular_relations(standard_matrix("A", 3)), bad)
    assert not rep.ok
    assert set(rep.failures) == {"tau-sigma(1): t1 s1 = s1 t1", "tau-sigma(2): t2 s2 = s2 t2"}
    assert len(rep.failures) <= rep.total


def test_closure_small_examples():
    s1 = perm_bb(CoxeterGroup("A", 2).generator(1))  # type: ignore[arg-type]
    assert enumerate_closure([s1], lambda a, b: a * b, identity_bb(2)).size == 2
    assert closure_of(chi_assignment(3)).size == 15
    assert enumerate_closure([s1, xi(2, 1)], lambda a, b: a * b, identity_bb(2)).size == 3


def test_closure_cap():
    res = closure_of(chi_assignment(4), cap=10)
    assert res.cap_hit and res.size == 11


def test_closure_order_independent():
    asg = lambda_assignment(3)
    gens = list(asg.sigma.values()) + list(asg.tau.values())
    base = enumerate_closure(gens, asg.mul, asg.identity).elements
    rng = random.Random(0)
    for _ in range(5):
        rng.shuffle(gens)
        assert enumerate_closure(gens, asg.mul, asg.identity).elements == base


def test_commutes_examples():
    words = random_words(alphabet(standard_matrix("A", 4)), 12, 500, 1)
    assert check_commutes(lambda w: phi_eval(w, 4), lambda w: upsilon_restrict(lambda_eval(w, 4)),
                          words).ok
    assert check_commutes(lambda w: lambda_eval(w, 4), lambda w: pi_project(eta_eval(w, 4)),
                          words).ok
    rep = check_commutes(lambda w: w, lambda w: w, words)
    assert rep.ok and rep.total == 500


def test_commutes_reports_mismatch():
    words = random_words(alphabet(standard_matrix("A", 3)), 6, 50, 2)
    rep = check_commutes(lambda w: len(w), lambda w: 0, words)
    assert not rep.ok


def test_oracle_examples():
    assert count_oracle("IS", 2) == 7
    assert count_oracle("SIS", 1) == 3
    assert count_oracle("BR", 3) == 15
    assert count_oracle("IS_TILDE", 3) == 16
    assert count_oracle("SIS", 3) == 139
    assert count_oracle("BR", 5) == 945
    with pytest.raises(ValueError):
        count_oracle("NOPE", 2)


def _set_partitions(n):
    if n == 0:
        yield []
        return
    for p in _set_partitions(n - 1):
        for i in range(len(p)):
            yield p[:i] + [p[i] + [n]] + p[i + 1:]
        yield p + [[n]]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_istar_and_fstar_formulas_against_brute_force(n):
    parts = list(_set_partitions(n))
    istar = sum(math.factorial(len(p)) for p in parts for q in parts if len(p) == len(q))
    fstar = 0
    for p in parts:
        for q in parts:
            if sorted(map(len, p)) == sorted(map(len, q)):
                sizes = [len(b) for b in p]
                fstar += math.prod(math.factorial(sizes.count(k)) for k in set(sizes))
    assert count_oracle("ISTAR", n) == istar
    assert count_oracle("FSTAR", n) == fstar


@pytest.mark.parametrize("n", [1, 2, 3])
def test_partial_brauer_formula_against_brute_force(n):
    pts = range(2 * n)
    count = 0
    for perm in itertools.permutations(pts):
        if all(perm[perm[p]] == p for p in pts):
            count += 1
    assert count_oracle("PBR", n) == count


def test_stirling_values():
    assert [stirling2(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
    assert stirling2(0, 0) == 1
