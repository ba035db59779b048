import logging
from typing import Dict, Optional

from chern.calculus import ChernCharacter, line_bundle_character
from cohomology.coh_class import linear_combine
from cohomology.context import PpavContext
from cohomology.errors import SequenceShapeError, WitConsistencyError
from curves.grr_abel import CurveLineBundleSpec, abel_pushforward
from fourier_mukai.sheaf import SheafInvariant, Side
from fourier_mukai.transform import check_wit_rules, mukai_transform
from reports.criterion_report import CriterionReport, ReportLedger

logger = logging.getLogger(__name__)

MEMBERS = ("sub", "total", "quot")


def ideal_sequence(ctx: PpavContext) -> Dict[str, SheafInvariant]:
    """0 -> I_C(2 Theta) -> O(2 Theta) -> a_* O_C(2 Theta) -> 0 for a minimal curve, all IT_0"""
    total = SheafInvariant(line_bundle_character(2, ctx), 0, Side.A)
    quot = SheafInvariant(abel_pushforward(CurveLineBundleSpec(ctx.g, 2 * ctx.g)), 0, Side.A)
    sub_ch = linear_combine([(1, total.ch.value), (-1, quot.ch.value)])
    sub = SheafInvariant(ChernCharacter(sub_ch), 0, Side.A)
    return {"sub": sub, "total": total, "quot": quot}


def _check_shape(sub: SheafInvariant, total: SheafInvariant, quot: SheafInvariant) -> None:
    if not (sub.ctx == total.ctx == quot.ctx):
        raise SequenceShapeError(
            f"sequence members live on p.p.a.v.s of dimension "
            f"{sub.ctx.g}, {total.ctx.g}, {quot.ctx.g}"
        )
    if not (sub.side == total.side == quot.side):
        raise SequenceShapeError("sequence members must live on the same side")
    if sub.wit_index is None or not (sub.wit_index == total.wit_index == quot.wit_index):
        raise SequenceShapeError(
            "sequence members must share one declared WIT index, got "
            f"{sub.wit_index}, {total.wit_index}, {quot.wit_index}"
        )


def transform_exact_sequence(
    sub: SheafInvariant, total: SheafInvariant, quot: SheafInvariant
) -> CriterionReport:
    """Whitney additivity of 0 -> sub -> total -> quot -> 0 before and after the transform.

    Members sharing a WIT index stay exact after transforming, so the
    transformed characters must add up the same way.
    """
    _check_shape(sub, total, quot)
    j = sub.wit_index
    members = {"sub": sub, "total": total, "quot": quot}
    ledger = ReportLedger(f"exact sequence under {sub.side.functor} (WIT_{j}, g={sub.ctx.g})")

    for name in MEMBERS:
        ledger.absorb(check_wit_rules(members[name]), f"wit_rules_{name}.")

    before = linear_combine([(1, sub.ch.value), (1, quot.ch.value)])
    ledger.record(
        "additivity_before",
        before == total.ch.value,
        f"ch(sub) + ch(quot) = [{before}], ch(total) = [{total.ch.value}]",
    )

    transforms: Dict[str, Optional[SheafInvariant]] = {}
    for name in MEMBERS:
        try:
            transforms[name] = mukai_transform(members[name])
        except WitConsistencyError as exc:
            transforms[name] = None
            logger.info("sequence member %s has no transform: %s", name, exc)
            ledger.record(f"transform_{name}", False, str(exc))

    if all(transforms[name] is not None for name in MEMBERS):
        after = linear_combine([(1, transforms["sub"].ch.value), (1, transforms["quot"].ch.value)])
        ledger.record(
            "additivity_after",
            after == transforms["total"].ch.value,
            f"transformed sum [{after}], transformed total [{transforms['total'].ch.value}]",
        )
        for name in MEMBERS:
            ledger.derive(f"transform_rank_{name}", transforms[name].rank)
            ledger.attach(f"transform_{name}", transforms[name].ch.value)
    else:
        ledger.record("additivity_after", False, "some member has no transform")
    return ledger.build()
