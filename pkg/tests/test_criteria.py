from fractions import Fraction

import pytest

from chern.calculus import divided_power_exponential, total_chern_class
from cohomology.coh_class import CohClass
from cohomology.context import PpavContext
from cohomology.errors import ContextMismatchError, DegreeError, RankError, WitConsistencyError
from criteria.jacobian import (
    DECOMPOSABLE_PPAV_REMARK,
    DECOMPOSABLE_SHEAF_REMARK,
    check_jacobian_criterion,
    matsusaka_ran_number,
    minimal_class,
)


def picard_chern(g):
    return divided_power_exponential(PpavContext(g), -1)


@pytest.mark.parametrize("g", range(1, 65))
def test_minimal_class_meets_theta_in_g_points(g):
    ctx = PpavContext(g)
    assert matsusaka_ran_number(minimal_class(ctx), ctx) == g


def test_matsusaka_ran_needs_a_one_cycle():
    ctx = PpavContext(3)
    with pytest.raises(DegreeError):
        matsusaka_ran_number(CohClass.theta(ctx), ctx)


def test_matsusaka_ran_rejects_a_cycle_from_another_dimension():
    with pytest.raises(ContextMismatchError):
        matsusaka_ran_number(minimal_class(PpavContext(3)), PpavContext(4))


@pytest.mark.parametrize("g", range(1, 11))
def test_theorem_table(g):
    for rank in range(1, 21):
        report = check_jacobian_criterion(rank, picard_chern(g), True, PpavContext(g))
        assert report.passed, report.failures
        transform = report.classes["transform_ch"]
        assert transform.component(g - 1) == 1
        assert transform.component(g) == rank
        assert all(transform.component(i) == 0 for i in range(g - 1))
        degree = report.derived["picard_degree"]
        assert degree == rank + g - 1
        assert (rank >= g) == (degree >= 2 * g - 1)
        assert report.derived["curve_line_bundle_degree"] == degree
        assert report.derived["intersection_number"] == g


def test_genus_three_rank_four():
    report = check_jacobian_criterion(4, picard_chern(3), True, PpavContext(3))
    assert report.passed
    assert report.classes["chern_character"].to_json() == ["4", "-1", "0", "0"]
    assert report.classes["transform_ch"].to_json() == ["0", "0", "1", "4"]
    assert report.derived["picard_degree"] == 6


def test_low_rank_passes_with_a_warning():
    report = check_jacobian_criterion(2, picard_chern(3), True, PpavContext(3))
    assert report.passed
    assert report.derived["rank_at_least_g"] is False
    assert any("rank 2 < g = 3" in note for note in report.notes)


def test_wrong_second_chern_class_fails():
    c = total_chern_class(PpavContext(2), [1, -1, 2])
    report = check_jacobian_criterion(3, c, True, PpavContext(2))
    assert not report.passed
    assert not report.check("chern_profile").passed
    assert not report.check("transform_table").passed


def test_wrong_first_chern_class_fails():
    c = divided_power_exponential(PpavContext(3), Fraction(-2))
    report = check_jacobian_criterion(4, c, True, PpavContext(3))
    assert not report.check("chern_profile").passed
    assert not report.passed


def test_undeclared_wit_g_fails():
    report = check_jacobian_criterion(4, picard_chern(3), False, PpavContext(3))
    assert not report.check("wit_g_declared").passed
    assert report.check("transform_table").passed
    assert report.verdict.value == "fail"


def test_impossible_ranks():
    with pytest.raises(WitConsistencyError):
        check_jacobian_criterion(0, picard_chern(2), True, PpavContext(2))
    with pytest.raises(RankError):
        check_jacobian_criterion(-1, picard_chern(2), False, PpavContext(2))


def test_hypothesis_flags_only_change_notes():
    ctx = PpavContext(4)
    plain = check_jacobian_criterion(5, picard_chern(4), True, ctx)
    flagged = check_jacobian_criterion(5, picard_chern(4), True, ctx,
                                       indecomposable_ppav=False, indecomposable_sheaf=False)
    assert plain.checks == flagged.checks
    assert DECOMPOSABLE_PPAV_REMARK in flagged.notes
    assert DECOMPOSABLE_SHEAF_REMARK in flagged.notes
    assert DECOMPOSABLE_PPAV_REMARK not in plain.notes


def test_genus_one_is_flagged():
    report = check_jacobian_criterion(3, picard_chern(1), True, PpavContext(1))
    assert report.passed
    assert report.derived["degenerate_genus"] is True
    assert report.classes["transform_ch"].to_json() == ["1", "3"]
