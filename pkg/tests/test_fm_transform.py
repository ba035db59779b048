import pytest

from chern.calculus import ChernCharacter, line_bundle_character
from cohomology.coh_class import CohClass, integrate, linear_combine
from cohomology.context import PpavContext
from cohomology.errors import InputError, UndeclaredWitError, WitConsistencyError
from fourier_mukai.sheaf import SheafInvariant, Side
from fourier_mukai.transform import (
    check_wit_rules,
    double_transform_check,
    mukai_transform,
    polarization_transform,
    transform_rank,
)
from sampling.fuzz import make_rng, random_sheaf


def sheaf(g, values, wit=None, side=Side.A):
    return SheafInvariant(ChernCharacter(CohClass.from_values(PpavContext(g), values)), wit, side)


def coeffs(s):
    return [str(value) for value in s.ch.value.coeffs]


def test_pushforward_transforms_to_picard_bundle():
    out = mukai_transform(sheaf(3, [0, 0, 1, 4], 0))
    assert coeffs(out) == ["4", "-1", "0", "0"]
    assert out.wit_index == 3
    assert out.side is Side.A_HAT


def test_picard_bundle_transforms_back():
    out = mukai_transform(sheaf(3, [5, -1, 0, 0], 3, Side.A_HAT))
    assert coeffs(out) == ["0", "0", "1", "5"]
    assert out.wit_index == 0
    assert out.side is Side.A


def test_negative_transform_rank_is_inconsistent():
    with pytest.raises(WitConsistencyError):
        mukai_transform(sheaf(2, [1, 0, -1], 0))
    with pytest.raises(WitConsistencyError):
        mukai_transform(sheaf(2, [1, 0, "1/2"], 0))


def test_index_out_of_range():
    with pytest.raises(WitConsistencyError):
        mukai_transform(sheaf(2, [1, 0, 1], 3))


def test_transform_needs_an_index():
    with pytest.raises(UndeclaredWitError):
        mukai_transform(sheaf(2, [1, 0, 1]))


def test_transform_rank_sign():
    assert transform_rank(sheaf(2, [1, 0, -3], 1)) == 3


def test_polarization_goes_to_its_inverse():
    for g in range(1, 9):
        dual = polarization_transform(PpavContext(g))
        assert dual.ch.value == CohClass.exponential(PpavContext(g), -1)
        assert dual.wit_index == g


@pytest.mark.parametrize("g", range(1, 11))
def test_involution_on_random_sheaves(g):
    rng = make_rng(1000 + g)
    ctx = PpavContext(g)
    for _ in range(1000):
        s = random_sheaf(ctx, rng)
        assert double_transform_check(s)
        assert check_wit_rules(s).check("transform_rank").passed


@pytest.mark.parametrize("g", range(1, 11))
def test_transform_exchanges_rank_and_chi(g):
    rng = make_rng(2000 + g)
    ctx = PpavContext(g)
    for _ in range(300):
        s = random_sheaf(ctx, rng)
        out = mukai_transform(s)
        assert integrate(out.ch.value) == (-1) ** (g + s.wit_index) * s.rank
        assert out.rank == transform_rank(s)


@pytest.mark.parametrize("g", [1, 2, 3, 5, 8])
def test_transform_is_linear_at_a_fixed_index(g):
    rng = make_rng(3000 + g)
    ctx = PpavContext(g)
    for _ in range(200):
        a = random_sheaf(ctx, rng)
        b = random_sheaf(ctx, rng)
        while b.wit_index != a.wit_index:
            b = random_sheaf(ctx, rng)
        p, q = (int(rng.integers(0, 5)) for _ in range(2))
        combined = SheafInvariant(
            ChernCharacter(linear_combine([(p, a.ch.value), (q, b.ch.value)])), a.wit_index, a.side
        )
        expected = linear_combine([(p, mukai_transform(a).ch.value), (q, mukai_transform(b).ch.value)])
        assert mukai_transform(combined).ch.value == expected


def test_wit_rules_report_violations():
    report = check_wit_rules(sheaf(2, [1, 0, -1], 0))
    assert not report.passed
    assert not report.check("transform_rank").passed
    assert report.derived["transform_rank"] == -1


def test_wit_g_sheaves_are_locally_free():
    report = check_wit_rules(sheaf(2, [0, 0, 1], 2))
    assert not report.check("wit_g_locally_free").passed


def test_wit_0_sheaf_with_zero_chi_must_vanish():
    assert not check_wit_rules(sheaf(2, [1, 0, 0], 0)).check("wit_0_transform_nonzero").passed
    assert check_wit_rules(sheaf(2, [0, 0, 0], 0)).passed


def test_ample_line_bundles_are_it0():
    ctx = PpavContext(3)
    ample = SheafInvariant(line_bundle_character(2, ctx), 3, Side.A)
    report = check_wit_rules(ample)
    assert not report.check("ample_line_bundle_it0").passed
    assert check_wit_rules(SheafInvariant(line_bundle_character(2, ctx), 0)).passed


def test_missing_index_is_reported():
    report = check_wit_rules(sheaf(2, [1, 0, 1]))
    assert [check.name for check in report.checks] == ["wit_declared"]
    assert not report.passed


def test_sheaf_json():
    s = sheaf(2, [3, -1, 0], 2, Side.A_HAT)
    assert s.to_json() == {"g": 2, "ch": ["3", "-1", "0"], "wit": 2, "side": "A-hat"}
    assert SheafInvariant.from_json(s.to_json()) == s


def test_sheaf_json_errors_point_at_the_field():
    with pytest.raises(InputError) as info:
        SheafInvariant.from_json({"g": 2, "ch": [1, 0, 0], "colour": "red"})
    assert info.value.field == "$.colour"
    with pytest.raises(InputError) as info:
        SheafInvariant.from_json({"g": 2, "ch": [-1, 0, 0]})
    assert info.value.field == "$.ch[0]"
    with pytest.raises(InputError) as info:
        SheafInvariant.from_json({"g": 2, "ch": [1, 0, 0], "side": "B"})
    assert info.value.field == "$.side"
