"""
Command handlers. Each one turns a validated input into a CriterionReport;
the runner decides how to print it and which exit code it maps to.
"""
from chern.calculus import (
    character_to_chern,
    chern_to_character,
    euler_characteristic,
    is_divided_power_profile,
    is_formal_only,
)
from chern.series import exp_chern, log_character
from cli.registry import command_registry
from cli.schema import (
    CharacterToChernInput,
    ChernToCharacterInput,
    CurveInput,
    JacobianInput,
    PicardInput,
    SequenceInput,
    TransformInput,
    VerifyInput,
)
from cli.verify_paper import verify_paper
from cohomology.errors import UndeclaredWitError
from config.settings import load_settings
from criteria.jacobian import check_jacobian_criterion
from criteria.picard import PicardLabel, check_picard_necessary, classify_picard_case
from criteria.sequences import transform_exact_sequence
from curves.grr_abel import (
    abel_pushforward,
    curve_chi,
    is_degenerate_genus,
    serre_dual_degree,
    support_line_bundle,
)
from fourier_mukai.transform import check_wit_rules, double_transform_check, mukai_transform
from reports.criterion_report import CriterionReport, ReportLedger

FORMAL_ONLY_NOTE = "rank 0: the total Chern class of a torsion sheaf is formal only."


def _g_argument(parser):
    parser.add_argument("--g", help="dimension of the p.p.a.v.")


def _sheaf_arguments(parser):
    parser.add_argument("--wit", help="declared WIT index j")
    parser.add_argument("--side", choices=("A", "A-hat"), help="variety the sheaf lives on (default A)")


def _c2ch_arguments(parser):
    _g_argument(parser)
    parser.add_argument("--rank", help="rank of the sheaf")
    parser.add_argument("--c", help="total Chern class, e.g. 1,-1,1/2")


def _ch2c_arguments(parser):
    _g_argument(parser)
    parser.add_argument("--ch", help="Chern character, e.g. 3,-1,0")


def _fm_arguments(parser):
    _ch2c_arguments(parser)
    _sheaf_arguments(parser)


def _curve_arguments(parser):
    parser.add_argument("--genus", help="genus of the curve")
    parser.add_argument("--degree", help="degree of the line bundle")


def _jacobian_arguments(parser):
    _c2ch_arguments(parser)
    parser.add_argument("--wit-g", action="store_true", help="F is declared WIT_g for Phi-hat")
    parser.add_argument("--decomposable-ppav", action="store_true")
    parser.add_argument("--decomposable-sheaf", action="store_true")


def _sequence_arguments(parser):
    _g_argument(parser)
    for name in ("sub", "total", "quot"):
        parser.add_argument(f"--{name}", help=f"Chern character of the {name} member")
    _sheaf_arguments(parser)


def _verify_arguments(parser):
    parser.add_argument("--genera", help="comma-separated genera (default 2..10)")
    parser.add_argument("--perturb", action="append", metavar="CHECK:INDEX:DELTA[@G]",
                        help="shift one expected coefficient; repeatable")


def _verify_defaults() -> dict:
    return {"default_genera": load_settings().default_genera}


@command_registry.command("c2ch", "total Chern class to Chern character",
                          ChernToCharacterInput, _c2ch_arguments)
def run_chern_to_character(spec: ChernToCharacterInput) -> CriterionReport:
    ctx = spec.c.ctx
    ledger = ReportLedger(f"Chern character (g={ctx.g}, rank={spec.rank})")
    ch = chern_to_character(spec.rank, spec.c)
    ledger.attach("ch", ch.value)
    ledger.derive("rank", spec.rank)
    ledger.derive("euler_characteristic", euler_characteristic(ch))
    ledger.derive("divided_power_profile", is_divided_power_profile(spec.rank, spec.c))

    back = character_to_chern(ch)
    ledger.record("roundtrip", back == spec.c, f"ch2c(c2ch(c)) = [{back.value}]")
    by_log = log_character(spec.rank, spec.c.value)
    ledger.record("log_expansion", by_log == ch.value, f"from log c: [{by_log}]")
    if is_formal_only(ch):
        ledger.note(FORMAL_ONLY_NOTE)
    return ledger.build()


@command_registry.command("ch2c", "Chern character to total Chern class",
                          CharacterToChernInput, _ch2c_arguments)
def run_character_to_chern(spec: CharacterToChernInput) -> CriterionReport:
    ch = spec.ch
    ledger = ReportLedger(f"total Chern class (g={ch.ctx.g}, rank={ch.rank})")
    c = character_to_chern(ch)
    ledger.attach("c", c.value)
    ledger.derive("rank", ch.rank)
    ledger.derive("euler_characteristic", euler_characteristic(ch))
    ledger.derive("divided_power_profile", is_divided_power_profile(ch.rank, c))

    back = chern_to_character(ch.rank, c)
    ledger.record("roundtrip", back == ch, f"c2ch(ch2c(ch)) = [{back.value}]")
    by_exp = exp_chern(ch.value)
    ledger.record("log_expansion", by_exp == c.value, f"from exp: [{by_exp}]")
    if is_formal_only(ch):
        ledger.note(FORMAL_ONLY_NOTE)
    return ledger.build()


@command_registry.command("fm", "Fourier-Mukai transform of a WIT sheaf",
                          TransformInput, _fm_arguments)
def run_transform(spec: TransformInput) -> CriterionReport:
    sheaf = spec.sheaf
    if sheaf.wit_index is None:
        raise UndeclaredWitError("fm needs a declared WIT index (--wit)")
    ledger = ReportLedger(f"{sheaf.side.functor} transform (g={sheaf.ctx.g}, WIT_{sheaf.wit_index})")
    rules = check_wit_rules(sheaf)
    for name, value in rules.derived.items():
        ledger.derive(name, value)
    if not ledger.absorb(rules, ""):
        return ledger.build()

    transform = mukai_transform(sheaf)
    ledger.attach("ch", transform.ch.value)
    ledger.derive("wit", transform.wit_index)
    ledger.derive("side", transform.side.value)
    ledger.derive("functor", transform.side.functor)
    ledger.record("involution", double_transform_check(sheaf),
                  "transforming twice returns the input invariants")
    return ledger.build()


@command_registry.command("grr-abel", "ch of a line bundle pushed into the Jacobian",
                          CurveInput, _curve_arguments)
def run_abel_pushforward(spec: CurveInput) -> CriterionReport:
    bundle = spec.spec
    g = bundle.genus
    ledger = ReportLedger(f"GRR along the Abel map (g={g}, d={bundle.degree})")
    ch = abel_pushforward(bundle)
    chi = curve_chi(bundle)
    ledger.attach("ch", ch.value)
    ledger.derive("chi", chi)
    ledger.derive("serre_dual_degree", serre_dual_degree(bundle).degree)

    ledger.record("chi_matches_integral", euler_characteristic(ch) == chi,
                  f"integral of ch = {euler_characteristic(ch)}, d - g + 1 = {chi}")
    support = support_line_bundle(ch)
    ledger.record(
        "minimal_class_component",
        ch.component(g - 1) == 1 and support.degree == bundle.degree,
        f"degree-{g - 1} part is [C]; support degree read back as {support.degree}",
    )
    if is_degenerate_genus(bundle):
        ledger.derive("degenerate_genus", True)
        ledger.note("genus 1: the Abel map is an isomorphism and [C] is the fundamental class.")
    return ledger.build()


@command_registry.command("picard-case", "classify the Picard sheaves of a degree-d line bundle",
                          CurveInput, _curve_arguments)
def run_picard_case(spec: CurveInput) -> CriterionReport:
    bundle = spec.spec
    g, d = bundle.genus, bundle.degree
    case = classify_picard_case(bundle)
    ledger = ReportLedger(f"Picard sheaves (g={g}, d={d})")
    for name, value in case.to_json().items():
        if name not in ("facts", "genus", "degree"):
            ledger.derive(name, value)
    for fact in case.facts:
        ledger.note(fact)

    if case.label is PicardLabel.NEGATIVE_DEGREE:
        expected = g - d - 1
    elif case.label is PicardLabel.HIGH:
        expected = d + 1 - g
    else:
        expected = None
    ledger.record("rank_formula", case.rank == expected,
                  f"rank {case.rank}, closed formula {expected}")

    dual = serre_dual_degree(bundle)
    ledger.record("chi_antisymmetry", curve_chi(dual) == -case.chi,
                  f"chi(L) = {case.chi}, chi(L^* (x) omega_C) = {curve_chi(dual)}")
    outer = {PicardLabel.NEGATIVE_DEGREE: PicardLabel.HIGH, PicardLabel.HIGH: PicardLabel.NEGATIVE_DEGREE}
    pairing_ok = outer.get(case.label, case.dual_label) == case.dual_label
    ledger.record(
        "dual_involution",
        serre_dual_degree(dual).degree == d and pairing_ok,
        f"d = {d} <-> {dual.degree} ({case.label.value} <-> {case.dual_label.value})",
    )
    return ledger.build()


@command_registry.command("check-jacobian", "sufficient criterion for (A, Theta) to be a Jacobian",
                          JacobianInput, _jacobian_arguments)
def run_jacobian(spec: JacobianInput) -> CriterionReport:
    return check_jacobian_criterion(
        spec.rank,
        spec.c,
        spec.wit_g,
        spec.ctx,
        indecomposable_ppav=spec.indecomposable_ppav,
        indecomposable_sheaf=spec.indecomposable_sheaf,
    )


@command_registry.command("check-picard", "necessary conditions satisfied by the Picard bundle",
                          PicardInput, _g_argument)
def run_picard_necessary(spec: PicardInput) -> CriterionReport:
    return check_picard_necessary(spec.ctx)


@command_registry.command("seq", "transform a short exact sequence of WIT sheaves",
                          SequenceInput, _sequence_arguments)
def run_sequence(spec: SequenceInput) -> CriterionReport:
    return transform_exact_sequence(spec.sub, spec.total, spec.quot)


@command_registry.command("verify-paper", "reproduce every displayed computation as exact checks",
                          VerifyInput, _verify_arguments, defaults=_verify_defaults)
def run_verify_paper(spec: VerifyInput) -> CriterionReport:
    return verify_paper(spec.genera, spec.perturbations)
