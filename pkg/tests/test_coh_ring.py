from fractions import Fraction
from math import factorial

import pytest
import sympy

from cohomology.coh_class import (
    THETA,
    CohClass,
    cup,
    cup_power,
    divided_power,
    integrate,
    linear_combine,
    poincare_dual,
)
from cohomology.context import PpavContext
from cohomology.errors import ContextMismatchError, InputError, InvariantViolationError
from cohomology.rationals import format_rational, parse_rational_list, to_fraction, to_integer
from sampling.fuzz import make_rng, random_class


def cls(g, *values):
    return CohClass.from_values(PpavContext(g), values)


def test_theta_squared_is_twice_the_divided_square():
    ctx = PpavContext(2)
    assert cup(CohClass.theta(ctx), CohClass.theta(ctx)) == cls(2, 0, 0, 2)


def test_theta_power_integrates_to_g_factorial():
    for g in range(1, 9):
        ctx = PpavContext(g)
        assert integrate(cup_power(CohClass.theta(ctx), g)) == factorial(g)
        assert integrate(divided_power(CohClass.theta(ctx), g)) == 1


def test_products_above_top_degree_vanish():
    ctx = PpavContext(3)
    assert cup(CohClass.point(ctx), CohClass.theta(ctx)).is_zero


def test_cup_is_commutative_and_associative():
    rng = make_rng(11)
    for g in (1, 2, 4, 6):
        ctx = PpavContext(g)
        unit = CohClass.unit(ctx)
        for _ in range(250):
            a, b, c = (random_class(ctx, rng) for _ in range(3))
            assert unit @ a == a == a @ unit
            assert a @ b == b @ a
            assert (a @ b) @ c == a @ (b @ c)
            assert a @ (b + c) == a @ b + a @ c


def test_exponential_is_multiplicative():
    ctx = PpavContext(5)
    assert CohClass.exponential(ctx, 2) @ CohClass.exponential(ctx, -3) == CohClass.exponential(ctx, -1)
    assert CohClass.exponential(ctx, Fraction(1, 2)).coeffs[3] == Fraction(1, 8)


def test_exponentials_add_exponents():
    ctx = PpavContext(6)
    for m in range(-8, 9):
        for n in range(-8, 9):
            product = CohClass.exponential(ctx, m) @ CohClass.exponential(ctx, n)
            assert product == CohClass.exponential(ctx, m + n)
            assert product.coeffs == tuple(Fraction((m + n) ** i) for i in range(7))


def test_poincare_dual_reverses_coefficients():
    assert poincare_dual(cls(3, 1, 2, 3, 4)) == cls(3, 4, 3, 2, 1)
    ctx = PpavContext(4)
    assert poincare_dual(CohClass.unit(ctx)) == CohClass.point(ctx)


def test_pairing_is_symmetric_and_duality_is_an_involution():
    rng = make_rng(12)
    for g in range(1, 9):
        ctx = PpavContext(g)
        for _ in range(40):
            a, b = random_class(ctx, rng), random_class(ctx, rng)
            assert integrate(a @ poincare_dual(b)) == integrate(b @ poincare_dual(a))
            assert poincare_dual(poincare_dual(a)) == a


def test_linear_combine_and_operators():
    a = cls(2, 1, "1/2", 0)
    b = cls(2, 0, "1/2", 3)
    assert linear_combine([(2, a), (-1, b)]) == cls(2, 2, "1/2", -3)
    assert a - b == cls(2, 1, 0, -3)
    assert -a == cls(2, -1, "-1/2", 0)
    assert 3 * a == a * 3


def test_mismatched_contexts_are_rejected():
    with pytest.raises(ContextMismatchError):
        cup(cls(2, 1, 0, 0), cls(3, 1, 0, 0, 0))
    with pytest.raises(ContextMismatchError):
        cls(2, 1, 0, 0) + cls(1, 1, 0)


def test_wrong_length_is_an_input_error():
    with pytest.raises(InputError) as info:
        CohClass.from_values(PpavContext(2), [1, 0], "ch")
    assert info.value.field == "ch"


def test_direct_construction_requires_fractions():
    with pytest.raises(InvariantViolationError):
        CohClass(PpavContext(1), (1, 0))


def test_homogeneous_parts():
    a = cls(3, 0, 0, 5, 0)
    assert a.is_homogeneous(2)
    assert not a.is_homogeneous(1)
    assert cls(3, 1, 2, 3, 4).homogeneous_part(1) == cls(3, 0, 2, 0, 0)


def test_to_sympy_uses_monomials():
    expr = cls(2, 1, -1, 1).to_sympy()
    assert sympy.expand(expr - (1 - THETA + THETA ** 2 / 2)) == 0


def test_serialization_is_lowest_terms():
    assert cls(2, "2/4", "-3/6", 7).to_json() == ["1/2", "-1/2", "7"]


@pytest.mark.parametrize("text", ["1/0", "1/-2", "0.5", "a", ""])
def test_malformed_rationals(text):
    with pytest.raises(InputError):
        to_fraction(text, "x")


def test_floats_and_booleans_are_rejected():
    with pytest.raises(InputError):
        to_fraction(0.5)
    with pytest.raises(InputError):
        to_fraction(True)
    with pytest.raises(InputError):
        to_integer("3/2")


def test_list_parsing_points_at_the_bad_entry():
    assert parse_rational_list("0,0,1,4") == [0, 0, 1, 4]
    with pytest.raises(InputError) as info:
        parse_rational_list("1,2,x", "--ch")
    assert info.value.field == "--ch[2]"
    assert format_rational(Fraction(-6, 4)) == "-3/2"


def test_context_bounds(monkeypatch):
    with pytest.raises(InputError):
        PpavContext(0)
    assert PpavContext(64).size == 65
    monkeypatch.setenv("THETA_CALC_MAX_G", "5")
    with pytest.raises(InputError):
        PpavContext(6)
    assert PpavContext(1).degenerate
