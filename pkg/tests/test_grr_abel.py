import pytest

from chern.calculus import ChernCharacter, euler_characteristic
from cohomology.coh_class import CohClass
from cohomology.context import PpavContext
from cohomology.errors import DegreeError, InputError
from curves.grr_abel import (
    CurveLineBundleSpec,
    abel_pushforward,
    curve_chi,
    is_degenerate_genus,
    serre_dual_degree,
    support_line_bundle,
)


@pytest.mark.parametrize("g", range(2, 11))
def test_twice_theta_restricted_to_the_curve(g):
    ch = abel_pushforward(CurveLineBundleSpec(g, 2 * g))
    assert ch.value.coeffs[: g - 1] == (0,) * (g - 1)
    assert ch.component(g - 1) == 1
    assert ch.component(g) == g + 1


def test_genus_three_degree_six():
    assert abel_pushforward(CurveLineBundleSpec(3, 6)).value.to_json() == ["0", "0", "1", "4"]


def test_genus_one_is_the_curve_itself():
    spec = CurveLineBundleSpec(1, 5)
    assert abel_pushforward(spec).value.to_json() == ["1", "5"]
    assert is_degenerate_genus(spec)


def test_euler_characteristic_is_riemann_roch():
    for g in range(1, 7):
        for d in range(-5, 15):
            spec = CurveLineBundleSpec(g, d)
            assert euler_characteristic(abel_pushforward(spec)) == curve_chi(spec) == d - g + 1


def test_serre_duality_is_an_involution():
    spec = CurveLineBundleSpec(4, -3)
    dual = serre_dual_degree(spec)
    assert dual.degree == 9
    assert serre_dual_degree(dual) == spec
    assert curve_chi(dual) == -curve_chi(spec)


def test_support_line_bundle_inverts_the_pushforward():
    for g in range(1, 8):
        for d in range(-4, 20):
            spec = CurveLineBundleSpec(g, d)
            assert support_line_bundle(abel_pushforward(spec)) == spec


def test_support_needs_a_curve_class():
    ctx = PpavContext(3)
    with pytest.raises(DegreeError):
        support_line_bundle(ChernCharacter(CohClass.from_values(ctx, [1, 0, 1, 4])))
    with pytest.raises(DegreeError):
        support_line_bundle(ChernCharacter(CohClass.from_values(ctx, [0, 0, 2, 4])))
    with pytest.raises(DegreeError):
        support_line_bundle(ChernCharacter(CohClass.from_values(ctx, [0, 0, 1, "1/2"])))


def test_bad_specs():
    with pytest.raises(InputError):
        CurveLineBundleSpec(0, 3)
    with pytest.raises(InputError):
        CurveLineBundleSpec.from_json({"genus": 2})
    with pytest.raises(InputError) as info:
        CurveLineBundleSpec.from_json({"genus": 2, "degree": "1/2"})
    assert info.value.field == "$.degree"


def test_genus_above_the_cap_points_at_the_genus(monkeypatch):
    monkeypatch.setenv("THETA_CALC_MAX_G", "5")
    with pytest.raises(InputError) as info:
        CurveLineBundleSpec.from_json({"genus": 6, "degree": 3})
    assert info.value.field == "$.genus"
    assert CurveLineBundleSpec.from_json({"genus": 5, "degree": 3}).genus == 5
