"""
Picard sheaves Phi^i(a_* L) of a degree-d line bundle L on a genus-g curve.

The degree axis splits into four ranges:

    d < 0            Phi^0 = 0, Phi^1 simple locally free of rank g - d - 1
    0 <= d < g-1     Phi^1 is non-zero at every point (chi < 0)
    g-1 <= d < 2g-1  Phi^0 and Phi^1 are both non-zero
    d >= 2g-1        Phi^1 = 0, Phi^0 simple locally free of rank d + 1 - g

and L -> L^* (x) omega_C exchanges d with 2g - 2 - d, pairing the outer ranges.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from chern.calculus import character_to_chern, divided_power_exponential, is_divided_power_profile
from cohomology.context import PpavContext
from cohomology.errors import InvariantViolationError
from criteria.sequences import ideal_sequence, transform_exact_sequence
from curves.grr_abel import (
    CurveLineBundleSpec,
    abel_pushforward,
    curve_chi,
    serre_dual_degree,
)
from fourier_mukai.sheaf import SheafInvariant, Side
from fourier_mukai.transform import double_transform_check, mukai_transform
from reports.criterion_report import CriterionReport, ReportLedger

logger = logging.getLogger(__name__)


class PicardLabel(str, Enum):
    NEGATIVE_DEGREE = "negative_degree"
    LOW = "low"
    MIDDLE = "middle"
    HIGH = "high"


@dataclass(frozen=True)
class PicardCase:
    label: PicardLabel
    facts: Tuple[str, ...]
    genus: int
    degree: int
    chi: int
    rank: Optional[int] = None
    wit_index: Optional[int] = None
    dual_degree: int = 0
    dual_label: Optional[PicardLabel] = None

    def to_json(self) -> dict:
        return {
            "label": self.label.value,
            "facts": list(self.facts),
            "genus": self.genus,
            "degree": self.degree,
            "chi": self.chi,
            "rank": self.rank,
            "wit": self.wit_index,
            "dual_degree": self.dual_degree,
            "dual_label": self.dual_label.value if self.dual_label else None,
        }


def picard_label(genus: int, degree: int) -> PicardLabel:
    if degree < 0:
        return PicardLabel.NEGATIVE_DEGREE
    if degree < genus - 1:
        return PicardLabel.LOW
    if degree < 2 * genus - 1:
        return PicardLabel.MIDDLE
    return PicardLabel.HIGH


def _transform_rank(spec: CurveLineBundleSpec, wit_index: int) -> int:
    """Rank of the single non-zero Picard sheaf, through Mukai's formula"""
    pushed = SheafInvariant(abel_pushforward(spec), wit_index, Side.A)
    return mukai_transform(pushed).rank


def classify_picard_case(spec: CurveLineBundleSpec) -> PicardCase:
    g, d = spec.genus, spec.degree
    label = picard_label(g, d)
    chi = curve_chi(spec)
    dual = serre_dual_degree(spec)
    facts = ["Phi^i(a_*L) = 0 for i != 0, 1"]
    rank = None
    wit_index = None

    if label is PicardLabel.NEGATIVE_DEGREE:
        wit_index = 1
        rank = _transform_rank(spec, wit_index)
        if rank != g - d - 1:
            raise InvariantViolationError(f"rank {rank} differs from g - d - 1 = {g - d - 1}")
        facts += [
            "Phi^0(a_*L) = 0",
            f"Phi^1(a_*L) is simple locally free of rank g-d-1 = {rank}",
            f"Phi^1(a_*L) is dual to (-1)^* Phi^0 of the degree {dual.degree} bundle L^*(x)omega_C",
        ]
    elif label is PicardLabel.LOW:
        facts.append(f"Phi^1(a_*L) is non-zero at every point: chi = d-g+1 = {chi} < 0")
    elif label is PicardLabel.MIDDLE:
        facts.append("Phi^0(a_*L) and Phi^1(a_*L) are both non-zero")
    else:
        wit_index = 0
        rank = _transform_rank(spec, wit_index)
        if rank != d + 1 - g:
            raise InvariantViolationError(f"rank {rank} differs from d + 1 - g = {d + 1 - g}")
        facts += [
            f"Phi^0(a_*L) is simple locally free of rank d+1-g = {rank}",
            "Phi^1(a_*L) = 0",
            f"Phi^0(a_*L) is dual to (-1)^* Phi^1 of the degree {dual.degree} bundle L^*(x)omega_C",
        ]

    logger.debug("g=%d, d=%d: %s, dual degree %d", g, d, label.value, dual.degree)
    return PicardCase(
        label=label,
        facts=tuple(facts),
        genus=g,
        degree=d,
        chi=chi,
        rank=rank,
        wit_index=wit_index,
        dual_degree=dual.degree,
        dual_label=picard_label(g, dual.degree),
    )


def check_picard_necessary(ctx: PpavContext) -> CriterionReport:
    """Properties of F = transform of a_* O_C(2 Theta) on a Jacobian"""
    g = ctx.g
    ledger = ReportLedger(f"Picard bundle necessary conditions (g={g})")
    sequence = ideal_sequence(ctx)
    quot = sequence["quot"]
    ledger.attach("ch_pushforward", quot.ch.value)

    picard = mukai_transform(quot)
    ledger.attach("ch_picard_bundle", picard.ch.value)
    ledger.derive("rank_picard_bundle", picard.rank)
    ledger.record("picard_rank", picard.rank == g + 1, f"rank {picard.rank}, expected g+1 = {g + 1}")
    ledger.record("wit_g", picard.wit_index == g,
                  f"F is WIT_{picard.wit_index} for {picard.side.functor}, expected WIT_{g}")

    chern = character_to_chern(picard.ch)
    ledger.attach("chern_classes", chern.value)
    expected = divided_power_exponential(ctx, -1)
    ledger.record(
        "chern_classes",
        chern == expected and is_divided_power_profile(picard.rank, chern),
        f"c(F) = [{chern.value}], expected (-1)^i theta^i/i!",
    )

    sequence_report = transform_exact_sequence(sequence["sub"], sequence["total"], sequence["quot"])
    ledger.absorb(sequence_report, "sequence.")
    ranks = tuple(sequence_report.derived.get(f"transform_rank_{name}") for name in ("sub", "total", "quot"))
    ledger.derive("rank_ideal_transform", ranks[0])
    ledger.derive("rank_line_bundle_transform", ranks[1])
    expected_ranks = (2 ** g - (g + 1), 2 ** g, g + 1)
    ledger.record(
        "quotient",
        ranks == expected_ranks,
        f"ranks (I-hat, O-hat, F) = {ranks}, expected {expected_ranks}",
    )

    ledger.record("involution", double_transform_check(quot),
                  "transforming a_* O_C(2 Theta) twice returns it")
    ledger.note("Simplicity of F (Hom(O_C(2 Theta), O_C(2 Theta)) = k) is asserted, not verified.")
    if ctx.degenerate:
        ledger.derive("degenerate_genus", True)
        ledger.note(f"genus {g} < 2: C = J(C) and the ideal sheaf is zero.")
    return ledger.build()
