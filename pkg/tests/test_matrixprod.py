"""Column operators, configuration enumeration and the matrix product."""

import random

import pytest

from nsmacdonald.compositions import (
    Composition,
    alpha,
    compositions_with,
    v_param,
)
from nsmacdonald.matrixprod import (
    InadmissiblePair,
    LatticeConfig,
    colour_data,
    column_component,
    config_weight,
    coordinates,
    cyclic_check,
    enumerate_configs,
    exponents_fgh,
    f_matrix_product,
    frozen_coefficient,
    hall_littlewood_q0,
    kappa_ratio,
    verify_basement_cyclic,
    verify_exchange_basement,
)
from nsmacdonald.qt import QTRational
from nsmacdonald.xpoly import XPolynomial, specialize_q

ONE = QTRational.one()
Q = QTRational.q()
T = QTRational.t()
ZERO = QTRational.zero()


def test_colour_data_worked_example():
    P, Q_set = colour_data((0, 2, 1, 5, 3), (2, 0, 0, 0, 5))
    assert P == frozenset({1, 3}) and Q_set == frozenset({2, 5})


def test_colour_data_trivial_cases():
    assert colour_data((0, 0), (0, 0)) == (frozenset(), frozenset())
    assert colour_data((1, 0), (0, 0)) == (frozenset({1}), frozenset())
    with pytest.raises(InadmissiblePair):
        colour_data((1, 1), (0, 0))
    with pytest.raises(InadmissiblePair):
        colour_data((0, 0), (1, 0))


def test_coordinates_worked_example():
    a, b = coordinates((0, 2, 1, 5, 3), (2, 0, 0, 0, 5))
    assert (a[1], a[2], a[3], a[5]) == (3, 2, 5, 4)
    assert (b[2], b[5]) == (1, 5)


def test_coordinates_simple():
    a, b = coordinates((1, 0), (1, 0))
    assert a[1] == 1 and b[1] == 1
    a, b = coordinates((0, 1), (1, 0))
    assert a[1] == 2 and b[1] == 1


def test_exponents_trivial_and_cyclic():
    f, g, h = exponents_fgh(frozenset(), frozenset(), {}, {}, 3)
    assert f == {} and g == {} and h == {}
    # one qualifying colour below p raises g by one
    P, Q_set = frozenset({2}), frozenset({1})
    a, b = {2: 1, 1: 2}, {1: 2}
    f, g, h = exponents_fgh(P, Q_set, a, b, 2)
    assert g[2] == 1 and f[2] == 1 and f[1] == 0
    # cyclic wrap: interval (3, 2) on n = 3 contains row 1
    P3, Q3 = frozenset(), frozenset({1, 2})
    a3, b3 = {1: 1, 2: 3}, {1: 1, 2: 2}
    f3, g3, h3 = exponents_fgh(P3, Q3, a3, b3, 3)
    assert h3[2] == 1


def test_column_component_examples():
    assert column_component((0, 0), (0, 0), {1: ZERO, 2: ZERO}) == XPolynomial.one(2)
    v = QTRational.monomial(1, 1)
    comp = column_component((0, 2), (0, 0), {1: ZERO, 2: v})
    assert comp == XPolynomial.constant(2, ONE / (ONE - v))
    comp = column_component((0, 2), (2, 0), {1: ZERO, 2: v})
    expect = XPolynomial.monomial(2, (1, 0), v * (ONE - T) / ((ONE - v) * (ONE - v * T)))
    assert comp == expect


def test_column_component_rejects_stray_twist():
    with pytest.raises(ValueError):
        column_component((0, 0), (0, 0), {1: Q, 2: ZERO})


def test_enumerate_configs_counts():
    assert len(list(enumerate_configs(Composition((0, 0, 0))))) == 1
    assert len(list(enumerate_configs(Composition((1, 0))))) == 1
    assert len(list(enumerate_configs(Composition((0, 1))))) == 2


def test_configs_are_legal():
    for mu in [Composition((2, 0, 1)), Composition((0, 2, 2))]:
        configs = list(enumerate_configs(mu))
        assert configs
        for xi in configs:
            assert xi.is_legal(mu)


def test_config_weight_examples(golden_polys):
    mu = Composition((0, 1))
    weights = {config_weight(xi, mu) for xi in enumerate_configs(mu)}
    x1, x2 = XPolynomial.variable(2, 1), XPolynomial.variable(2, 2)
    assert weights == {x2, x1.scale(Q * (ONE - T) / (ONE - Q * T))}
    zero_mu = Composition((0, 0, 0))
    (only,) = enumerate_configs(zero_mu)
    assert config_weight(only, zero_mu) == XPolynomial.one(3)


def test_f_matrix_product_goldens(golden_polys):
    for parts, poly in golden_polys.items():
        assert f_matrix_product(Composition(parts)) == poly
    assert f_matrix_product(Composition((0, 0, 0, 0))) == XPolynomial.one(4)


def test_hall_littlewood_examples(golden_polys):
    x1, x2 = XPolynomial.variable(2, 1), XPolynomial.variable(2, 2)
    assert hall_littlewood_q0(Composition((1, 0))) == x1
    assert hall_littlewood_q0(Composition((0, 1))) == x2
    assert hall_littlewood_q0(Composition((0, 0))) == XPolynomial.one(2)


def test_hall_littlewood_is_q0_specialisation():
    for mu in [Composition((2, 1)), Composition((0, 2, 1)), Composition((1, 0, 2))]:
        assert hall_littlewood_q0(mu) == specialize_q(f_matrix_product(mu), 0)


def test_kappa_examples():
    assert kappa_ratio((1, 0), (0, 0), {1: ZERO}).is_one()
    v2 = QTRational.monomial(2, 1)
    assert kappa_ratio((0, 2), (2, 0), {2: v2}) == v2
    with pytest.raises(ZeroDivisionError):
        kappa_ratio((0, 1), (0, 1), {1: ZERO})


def _random_admissible(rng, n):
    while True:
        I = tuple(rng.choice([0, 0, *range(1, n + 1)]) for _ in range(n))
        if any(I.count(c) > 1 for c in range(1, n + 1)):
            continue
        present = [c for c in range(1, n + 1) if c in I]
        keep = [c for c in present if rng.random() < 0.6]
        J = [0] * n
        rows = list(range(n))
        rng.shuffle(rows)
        for c, r in zip(keep, rows):
            J[r] = c
        return I, tuple(J)


def test_kappa_is_the_rotation_ratio():
    rng = random.Random(42)
    checked = 0
    while checked < 120:
        n = rng.choice([2, 3, 4])
        I, J = _random_admissible(rng, n)
        P, Q_set = colour_data(I, J)
        v = {p: QTRational.monomial(p, p * p % 3 + 1) for p in P | Q_set}
        for c in range(1, n + 1):
            v.setdefault(c, ZERO)
        numerator = column_component(I, J, v)
        rotate = lambda vec: (vec[-1],) + tuple(vec[:-1])
        # rotated boundary, with the variable substitution x_i -> x_{i-1}
        shifted = [(n, ONE)] + [(k, ONE) for k in range(1, n)]
        denominator = column_component(rotate(I), rotate(J), v, row_vars=shifted)
        if denominator.is_zero() or (J[-1] >= 1 and v[J[-1]].is_zero()):
            continue
        assert numerator == denominator.scale(kappa_ratio(I, J, v))
        checked += 1


def test_cyclic_check_examples():
    rep = cyclic_check(Composition((0, 1)), 2)
    assert rep.ok and rep.checked == 2
    for mu in [Composition((0, 0)), Composition((1, 1)), Composition((2, 0, 1))]:
        for i in range(1, mu.n + 1):
            assert cyclic_check(mu, i).ok


def test_cyclic_check_detects_corrupted_twists():
    def corrupted(mu, i, j):
        value = v_param(mu, i, j)
        return value * T if not value.is_zero() else value

    rep = cyclic_check(Composition((0, 1)), 2, v_fn=corrupted)
    assert not rep.ok


def test_frozen_coefficient_examples():
    from_config, from_omega = frozen_coefficient(Composition((0, 1)))
    assert from_config == from_omega == ONE / (ONE - Q)
    from_config, from_omega = frozen_coefficient(Composition((0, 0)))
    assert from_config.is_one() and from_omega.is_one()
    mu = Composition((2, 0))
    from_config, from_omega = frozen_coefficient(mu)
    expect = ONE / (
        (ONE - Q**2 * QTRational.monomial(0, alpha(mu, 1, 0)))
        * (ONE - Q * QTRational.monomial(0, alpha(mu, 1, 1)))
    )
    assert from_config == from_omega == expect


def test_monic_and_frozen_agree_on_family():
    for mu in compositions_with(2, 2):
        poly = f_matrix_product(mu)
        assert poly.coefficient(mu.parts).is_one()
        from_config, from_omega = frozen_coefficient(mu)
        assert from_config == from_omega


def test_exchange_basement():
    rep = verify_exchange_basement(Composition((0, 1)), 1, [1, 2])
    assert rep.ok
    rep = verify_exchange_basement(Composition((2, 1, 0)), 2, [2, 1, 3])
    assert rep.ok
    with pytest.raises(ValueError):
        verify_exchange_basement(Composition((0, 1)), 1, [2, 1])


def test_basement_cyclic():
    for rho in ([1, 2], [2, 1]):
        assert verify_basement_cyclic(Composition((0, 1)), rho).ok
        assert verify_basement_cyclic(Composition((2, 1)), rho).ok
    assert verify_basement_cyclic(Composition((1, 0, 2)), [3, 1, 2]).ok


def test_rho_must_be_permutation():
    with pytest.raises(ValueError):
        list(enumerate_configs(Composition((0, 1)), basement=(1, 1)))
