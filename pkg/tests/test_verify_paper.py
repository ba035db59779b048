import pytest

from cli.runner import EXIT_FAIL, EXIT_INPUT, EXIT_PASS, run
from cli.schema import Perturbation
from cli.verify_paper import GOLDEN_CHECKS, verify_paper
from cohomology.errors import InputError


def test_default_run_passes(capsys):
    assert run(["verify-paper"]) == EXIT_PASS
    out = capsys.readouterr().out
    assert "verdict: PASS" in out
    assert "g=10:jacobian_table" in out


def test_every_genus_gets_every_check():
    report = verify_paper(list(range(2, 11)))
    assert report.passed, report.failures
    assert len(report.checks) == 9 * (len(GOLDEN_CHECKS) + 1)
    assert report.check("g=7:profile_samples").passed


def test_genus_one_passes_with_a_note():
    report = verify_paper([1])
    assert report.passed, report.failures
    assert any("degenerate" in note for note in report.notes)


def test_large_genus():
    assert verify_paper([64]).passed


@pytest.mark.parametrize("name", sorted(GOLDEN_CHECKS))
def test_each_check_detects_a_perturbation(name):
    report = verify_paper([3, 4], [Perturbation(name, 0, 1, genus=3)])
    assert not report.check(f"g=3:{name}").passed
    assert report.check(f"g=4:{name}").passed
    assert [check.name for check in report.failures] == [f"g=3:{name}"]


def test_perturbation_flips_the_exit_code(capsys):
    argv = ["verify-paper", "--genera", "2,5", "--perturb", "picard_bundle_ch:1:-1/2"]
    assert run(argv) == EXIT_FAIL
    out = capsys.readouterr().out
    assert "verdict: FAIL" in out


def test_bad_perturbations(capsys):
    assert run(["verify-paper", "--genera", "2", "--perturb", "nonsense:0:1"]) == EXIT_INPUT
    assert run(["verify-paper", "--genera", "2", "--perturb", "matsusaka_ran:1:1"]) == EXIT_INPUT
    assert run(["verify-paper", "--genera", "2", "--perturb", "pushforward_ch:0"]) == EXIT_INPUT
    assert run(["verify-paper", "--genera", "2", "--perturb", "pushforward_ch:0:1@3"]) == EXIT_INPUT
    capsys.readouterr()


def test_empty_genus_list():
    with pytest.raises(InputError):
        verify_paper([])


def test_genus_cap_applies(monkeypatch, capsys):
    monkeypatch.setenv("THETA_CALC_MAX_G", "4")
    assert run(["verify-paper", "--genera", "3,5"]) == EXIT_INPUT
    assert "--genera[1]" in capsys.readouterr().err


def test_perturbation_text_form():
    p = Perturbation.parse("ideal_sequence_ranks:2:-3/4@5")
    assert (p.check, p.index, p.genus) == ("ideal_sequence_ranks", 2, 5)
    assert p.to_text() == "ideal_sequence_ranks:2:-3/4@5"
