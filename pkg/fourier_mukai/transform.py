"""
Fourier-Mukai transforms at the level of Chern characters.

For a WIT_j sheaf E on a g-dimensional p.p.a.v., Mukai's formula reads

    ch_i(E-hat) = (-1)^(i+j) PD(ch_(g-i)(E))

and in the divided-power basis PD is coefficient reversal, so the whole
transform is a signed permutation of coefficients. The transform is WIT_(g-j)
for the opposite functor and lives on the other side. The (-1)^* pullback that
separates Phi-hat from Mukai's original functor acts trivially on even-degree
classes and is not modelled.
"""
import logging
from fractions import Fraction

from chern.calculus import ChernCharacter, euler_characteristic
from cohomology.coh_class import CohClass
from cohomology.context import PpavContext
from cohomology.errors import UndeclaredWitError, WitConsistencyError
from fourier_mukai.sheaf import SheafInvariant, Side
from reports.criterion_report import CriterionReport, ReportLedger

logger = logging.getLogger(__name__)


def transform_rank(s: SheafInvariant) -> Fraction:
    """Rank of the transform of a WIT_j sheaf: (-1)^j chi(s)"""
    return (-1) ** s.wit_index * euler_characteristic(s.ch)


def mukai_transform(s: SheafInvariant) -> SheafInvariant:
    if s.wit_index is None:
        raise UndeclaredWitError("the transform needs a declared WIT index")
    g = s.ctx.g
    j = s.wit_index
    if not 0 <= j <= g:
        raise WitConsistencyError(f"WIT index must lie in [0, {g}], got {j}")
    coeffs = s.ch.value.coeffs
    out = tuple((-1) ** (i + j) * coeffs[g - i] for i in range(g + 1))
    rank = out[0]
    if rank.denominator != 1 or rank < 0:
        raise WitConsistencyError(
            f"a WIT_{j} sheaf with chi = {euler_characteristic(s.ch)} would have a "
            f"transform of rank {rank}"
        )
    logger.debug("%s transform of WIT_%d sheaf on g=%d", s.side.functor, j, g)
    return SheafInvariant(
        ch=ChernCharacter(CohClass(s.ctx, out)),
        wit_index=g - j,
        side=s.side.flipped(),
    )


def _ample_multiple(s: SheafInvariant):
    """n if ch(s) = e^(n theta) for an integer n >= 1, else None"""
    if s.rank != 1:
        return None
    n = s.ch.component(1)
    if n.denominator != 1 or n < 1:
        return None
    if s.ch.value != CohClass.exponential(s.ctx, n):
        return None
    return int(n)


def check_wit_rules(s: SheafInvariant) -> CriterionReport:
    """Arithmetic consequences of a declared WIT index; violations are report entries"""
    ledger = ReportLedger(f"WIT rules ({s.side.functor})")
    g = s.ctx.g
    chi = euler_characteristic(s.ch)
    ledger.derive("euler_characteristic", chi)

    if not ledger.record("wit_declared", s.wit_index is not None,
                         "declared" if s.wit_index is not None else "no WIT index declared"):
        return ledger.build()
    j = s.wit_index
    if not ledger.record("wit_range", 0 <= j <= g, f"j={j}, allowed [0, {g}]"):
        return ledger.build()

    ledger.record(
        "wit_g_locally_free",
        j != g or s.rank >= 1,
        f"WIT_{g} sheaves are locally free and non-zero; rank is {s.rank}",
    )

    rank = transform_rank(s)
    ledger.derive("transform_rank", rank)
    ledger.derive("transform_wit", g - j)
    ledger.record(
        "transform_rank",
        rank.denominator == 1 and rank >= 0,
        f"(-1)^{j} * chi = {rank} must be a non-negative integer",
    )

    if j == 0:
        ledger.record(
            "wit_0_transform_nonzero",
            chi != 0 or s.ch.value.is_zero,
            f"a non-zero WIT_0 sheaf has a locally free WIT_{g} transform of rank chi = {chi}",
        )
        ledger.note("WIT_0 and IT_0 coincide; the transform is locally free.")

    n = _ample_multiple(s)
    if n is not None:
        ledger.record(
            "ample_line_bundle_it0",
            j == 0,
            f"ch = e^({n} theta) is an ample line bundle, which is IT_0; declared j={j}",
        )
    return ledger.build()


def double_transform_check(s: SheafInvariant) -> bool:
    """Does transforming twice give back exactly the same invariants?"""
    return mukai_transform(mukai_transform(s)) == s


def polarization_transform(ctx: PpavContext) -> SheafInvariant:
    """Transform of the principal polarization L = O(Theta), which is IT_0"""
    polarization = SheafInvariant(ChernCharacter(CohClass.exponential(ctx, 1)), 0, Side.A)
    return mukai_transform(polarization)
