"""Tests for exact sparse polynomial arithmetic and univariate helpers."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hesspave.poly import (
    Poly,
    as_fraction,
    distinct_root_count,
    rational_square_root,
    solve_linear,
    univariate_gcd,
)

NVARS = 3


def build(terms):
    """Assemble a polynomial in NVARS variables from (coeff, exponents) pairs."""
    out = Poly.zero(NVARS)
    for coeff, expo in terms:
        out = out + Poly(NVARS, {tuple(expo): Fraction(coeff)})
    return out


coeffs = st.integers(min_value=-4, max_value=4).map(Fraction) | st.fractions(
    min_value=-3, max_value=3, max_denominator=5
)
exponents = st.tuples(*([st.integers(min_value=0, max_value=3)] * NVARS))
polys = st.lists(st.tuples(coeffs, exponents), max_size=5).map(build)
points = st.tuples(*([st.integers(min_value=-3, max_value=3).map(Fraction)] * NVARS))


def test_as_fraction_accepts_int_and_fraction_only():
    assert as_fraction(3) == Fraction(3)
    assert as_fraction(Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_fraction(0.5)


def test_constructors_and_flags():
    zero = Poly.zero(NVARS)
    assert zero.is_zero() and zero.is_constant()
    assert zero.constant_value() == 0
    five = Poly.const(NVARS, 5)
    assert five.is_constant() and not five.is_zero()
    assert five.constant_value() == Fraction(5)
    x = Poly.var(NVARS, 0)
    assert not x.is_constant()
    with pytest.raises(ValueError):
        Poly.var(NVARS, NVARS)


def test_product_expands_difference_of_squares():
    x = Poly.var(NVARS, 0)
    one = Poly.const(NVARS, 1)
    p = (x + one) * (x - one)
    assert p.terms == {(2, 0, 0): Fraction(1), (0, 0, 0): Fraction(-1)}
    assert p.format() == "-1+z1^2"


def test_substitute_and_evaluate_agree():
    x, y = Poly.var(NVARS, 0), Poly.var(NVARS, 1)
    p = x * x + y * Poly.const(NVARS, 3) - Poly.const(NVARS, 7)
    shifted = p.substitute(0, y + Poly.const(NVARS, 2))
    expected = lambda b: (b + 2) ** 2 + 3 * b - 7
    for b in (-2, 0, 5):
        assert shifted.evaluate((0, Fraction(b), 0)) == expected(Fraction(b))


def test_univariate_coeffs_round_trip_and_rejection():
    x = Poly.var(NVARS, 0)
    p = x * x * Poly.const(NVARS, 2) - x + Poly.const(NVARS, 4)
    assert p.univariate_coeffs(0) == [Fraction(4), Fraction(-1), Fraction(2)]
    mixed = x * Poly.var(NVARS, 2)
    with pytest.raises(ValueError):
        mixed.univariate_coeffs(0)


def test_coeff_in_var_splits_by_power():
    x, y = Poly.var(NVARS, 0), Poly.var(NVARS, 1)
    p = x * x * y + x * y + Poly.const(NVARS, 5)
    assert p.coeff_in_var(0, 2) == y
    assert p.coeff_in_var(0, 1) == y
    assert p.coeff_in_var(0, 0) == Poly.const(NVARS, 5)
    assert p.coeff_in_var(0, 3).is_zero()


def test_derivative_degree_and_variable_tracking():
    x, y = Poly.var(NVARS, 0), Poly.var(NVARS, 1)
    p = x * y * y + x
    assert p.derivative(1) == x * y * Poly.const(NVARS, 2)
    assert p.total_degree() == 3
    assert p.degree_in(1) == 2
    assert p.variables_used() == (0, 1)
    assert Poly.const(NVARS, 9).variables_used() == ()


def test_format_uses_supplied_names():
    x, y = Poly.var(NVARS, 0), Poly.var(NVARS, 1)
    assert (x * y - Poly.const(NVARS, 2)).format(("a", "b", "c")) == "-2+a*b"


def test_univariate_gcd_is_monic_ascending():
    # gcd(x^2 - 1, x - 1) = x - 1, reported as ascending coefficients.
    g = univariate_gcd(
        [Fraction(-1), Fraction(0), Fraction(1)], [Fraction(-1), Fraction(1)]
    )
    assert g == [Fraction(-1), Fraction(1)]
    g2 = univariate_gcd([Fraction(2), Fraction(2)], [Fraction(4)])
    assert g2 == [Fraction(1)]


def test_distinct_root_count_over_the_complex_numbers():
    # (x - 1)^2 has one distinct root; x^2 - 1 and x^2 + 1 each have two.
    assert distinct_root_count([Fraction(1), Fraction(-2), Fraction(1)]) == 1
    assert distinct_root_count([Fraction(-1), Fraction(0), Fraction(1)]) == 2
    assert distinct_root_count([Fraction(1), Fraction(0), Fraction(1)]) == 2
    assert distinct_root_count([Fraction(0), Fraction(1)]) == 1
    with pytest.raises(ValueError):
        distinct_root_count([Fraction(0)])


def test_rational_square_root_exact_or_none():
    assert rational_square_root(Fraction(4)) == 2
    assert rational_square_root(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_square_root(Fraction(0)) == 0
    assert rational_square_root(Fraction(2)) is None
    assert rational_square_root(Fraction(-1)) is None


def test_solve_linear_solves_and_rejects_singular():
    sol = solve_linear([[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]],
                       [Fraction(5), Fraction(10)])
    assert sol == [Fraction(1), Fraction(3)]
    with pytest.raises(ValueError):
        solve_linear([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]],
                     [Fraction(1), Fraction(2)])


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Poly.zero(NVARS)


@settings(max_examples=60, deadline=None)
@given(polys, polys, points)
def test_evaluation_is_a_ring_homomorphism(p, q, point):
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)


@settings(max_examples=40, deadline=None)
@given(polys, points)
def test_substitution_matches_pointwise_composition(p, point):
    replacement = Poly.var(NVARS, 1) + Poly.const(NVARS, 1)
    composed = p.substitute(0, replacement)
    moved = (replacement.evaluate(point), point[1], point[2])
    assert composed.evaluate(point) == p.evaluate(moved)
