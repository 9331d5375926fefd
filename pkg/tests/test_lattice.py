"""Face weights, R-matrix, Yang-Baxter and row-operator exchange relations."""

import itertools
from fractions import Fraction

import pytest

from nsmacdonald.lattice import (
    StructuredWeight,
    capped_states,
    exchange_check,
    l_weight,
    r_weight,
    row_operator_elem,
    row_operator_elem_poly,
    row_operator_expand,
    ybe_check,
    ybe_check_symbolic,
)
from nsmacdonald.qt import QTRational
from nsmacdonald.xpoly import XPolynomial

ONE = QTRational.one()
T = QTRational.t()


def test_l_weight_worked_examples():
    w = l_weight((1, 1, 1), 1, (2, 0, 1), 2)
    assert w.coeff == (ONE - T) * T and w.xdeg == 1
    w = l_weight((2, 1, 2), 0, (1, 1, 2), 1)
    assert w.coeff == (ONE - T**2) * T**3 and w.xdeg == 1
    w = l_weight((1, 2), 0, (1, 2), 0)
    assert w.coeff.is_one() and w.xdeg == 0


def test_l_weight_zero_patterns():
    # forbidden crossing: left colour above right colour
    assert l_weight((1, 1), 2, (2, 0), 1).is_zero()
    # conservation violation
    assert l_weight((1, 0), 0, (1, 1), 0).is_zero()


def test_l_weight_conservation_scan():
    # nonzero weight implies bottom + e_left = top + e_right
    vecs = list(itertools.product(range(3), repeat=2))
    for I in vecs:
        for K in vecs:
            for j in range(3):
                for l in range(3):
                    w = l_weight(I, j, K, l)
                    lhs = list(I)
                    if j:
                        lhs[j - 1] += 1
                    rhs = list(K)
                    if l:
                        rhs[l - 1] += 1
                    if lhs != rhs:
                        assert w.is_zero()


def test_l_weight_x_degree_law():
    # x-degree is 1 exactly when the right edge is coloured
    vecs = list(itertools.product(range(3), repeat=2))
    for I in vecs:
        for K in vecs:
            for j in range(3):
                for l in range(3):
                    w = l_weight(I, j, K, l)
                    if not w.is_zero():
                        assert w.xdeg == (1 if l >= 1 else 0)


def test_r_weight_entries():
    z = QTRational.q()
    assert r_weight(0, 0, 0, 0, z, T).is_one()
    assert r_weight(1, 0, 0, 1, z, T) == (ONE - T) / (ONE - T * z)
    assert r_weight(0, 1, 1, 0, z, T) == (ONE - T) * z / (ONE - T * z)
    assert r_weight(1, 0, 1, 0, z, T) == T * (ONE - z) / (ONE - T * z)
    assert r_weight(0, 1, 0, 1, z, T) == (ONE - z) / (ONE - T * z)
    assert r_weight(1, 0, 1, 2, z, T).is_zero()


def test_r_weight_pole():
    with pytest.raises(ZeroDivisionError):
        r_weight(0, 1, 0, 1, Fraction(1, 2), Fraction(2))


def test_ybe_trivial_boundary():
    rep = ybe_check(1, occupation_cap=1, nonconserving_samples=10)
    assert rep.ok, rep.failures[:3]


def test_ybe_n2():
    rep = ybe_check(2, occupation_cap=2)
    assert rep.ok, rep.failures[:3]


def test_ybe_symbolic_n1():
    rep = ybe_check_symbolic(1, 2)
    assert rep.ok, rep.failures[:3]


def test_ybe_detects_corrupted_table():
    def corrupted(I, j, K, l, t=None):
        w = l_weight(I, j, K, l, t)
        if j == 0 and l == 1 and not w.is_zero():
            return StructuredWeight(w.coeff * (t if t is not None else T), w.xdeg)
        return w

    rep = ybe_check(1, 1, l_weight_fn=corrupted, nonconserving_samples=0)
    assert not rep.ok


def test_row_operator_examples():
    # N = 0: colour enters on the left and exits through the top immediately
    coeff, deg = row_operator_elem(1, (((0, 0),)), (((1, 0),)))
    assert coeff.is_one() and deg == 0
    # N = 1: one step right, then exit at the top of column 1
    coeff, deg = row_operator_elem(1, ((0, 0), (0, 0)), ((0, 0), (1, 0)))
    assert coeff == T**0 and deg == 1
    # with another colour above, passing through picks up a power of t
    coeff, deg = row_operator_elem(1, ((0, 1), (0, 0)), ((0, 1), (1, 0)))
    assert coeff == T and deg == 1
    # colour conservation violation gives zero
    coeff, deg = row_operator_elem(1, (((0, 0),)), (((0, 0),)))
    assert coeff.is_zero()


def test_row_operator_poly_form():
    poly = row_operator_elem_poly(1, ((0, 0), (0, 0)), ((0, 0), (1, 0)))
    assert poly == XPolynomial.variable(1, 1)


def test_row_operator_expand_matches_elem():
    top_state = ((1, 1), (0, 1))
    expansions = row_operator_expand(2, top_state)
    assert expansions
    for bottom, coeff, deg in expansions:
        assert row_operator_elem(2, bottom, top_state) == (coeff, deg)
    # the top state holds one more colour-2 path than the bottom state
    for bottom, _, _ in expansions:
        totals_top = [sum(site[c] for site in top_state) for c in range(2)]
        totals_bottom = [sum(site[c] for site in bottom) for c in range(2)]
        assert totals_top == [totals_bottom[0], totals_bottom[1] + 1]


@pytest.mark.parametrize("i,j", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_exchange_relations_n2(i, j):
    rep = exchange_check(i, j, 2, N=1, cap=1)
    assert rep.checked > 0
    assert rep.ok, rep.failures[:3]


def test_capped_states_count():
    assert len(capped_states(2, 2, 1)) == 16
