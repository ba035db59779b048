"""
Chern classes, Chern characters and Euler characteristics on a p.p.a.v.

Conversions use the Newton identities between elementary symmetric
functions (Chern classes) and power sums (k! ch_k):

    p_k = c_1 p_(k-1) - c_2 p_(k-2) + ... + (-1)^(k-1) k c_k

Every product is a cup product of homogeneous pieces, evaluated through the
binomial rule of the divided-power basis.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List

from cohomology.coh_class import CohClass, binomial_row, cup, integrate
from cohomology.context import PpavContext
from cohomology.errors import InvariantViolationError, RankError
from cohomology.rationals import format_rational_list

logger = logging.getLogger(__name__)

BASIS_TAG = "divided-power"


@dataclass(frozen=True)
class ChernCharacter:
    """ch(E); component i is ch_i and component 0 is the rank."""
    value: CohClass

    def __post_init__(self):
        rank = self.value.component(0)
        if rank.denominator != 1 or rank < 0:
            raise RankError(f"ch_0 must be a non-negative integer rank, got {rank}")

    @property
    def ctx(self) -> PpavContext:
        return self.value.ctx

    @property
    def rank(self) -> int:
        return int(self.value.component(0))

    def component(self, degree: int) -> Fraction:
        return self.value.component(degree)

    def to_json(self) -> dict:
        return {"basis": BASIS_TAG, "ch": self.value.to_json()}


@dataclass(frozen=True)
class TotalChernClass:
    """c(E) = 1 + c_1 + ... + c_g; component i is c_i."""
    value: CohClass

    def __post_init__(self):
        if self.value.component(0) != 1:
            raise InvariantViolationError(
                f"c_0 of a total Chern class must be 1, got {self.value.component(0)}"
            )

    @property
    def ctx(self) -> PpavContext:
        return self.value.ctx

    def component(self, degree: int) -> Fraction:
        return self.value.component(degree)

    def to_json(self) -> dict:
        return {"basis": BASIS_TAG, "c": self.value.to_json()}


def _graded_product(i: int, x: Fraction, j: int, y: Fraction) -> Fraction:
    """Coefficient of (x theta^i/i!) cup (y theta^j/j!) in degree i+j"""
    return binomial_row(i + j)[i] * x * y


def chern_to_character(rank: int, c: TotalChernClass) -> ChernCharacter:
    if rank < 0:
        raise RankError(f"rank must be non-negative, got {rank}")
    ctx = c.ctx
    coeffs = c.value.coeffs
    power_sums: List[Fraction] = [Fraction(rank)]
    for k in range(1, ctx.size):
        total = (-1) ** (k - 1) * k * coeffs[k]
        for i in range(1, k):
            total += (-1) ** (i - 1) * _graded_product(i, coeffs[i], k - i, power_sums[k - i])
        power_sums.append(total)
    ch = [Fraction(rank)] + [power_sums[k] / factorial(k) for k in range(1, ctx.size)]
    return ChernCharacter(CohClass(ctx, tuple(ch)))


def character_to_chern(ch: ChernCharacter) -> TotalChernClass:
    """Inverse Newton recursion: k c_k = sum_i (-1)^(i-1) c_(k-i) p_i"""
    ctx = ch.ctx
    if ch.rank == 0:
        logger.debug("total Chern class of a rank-0 character is formal only")
    power_sums = [factorial(k) * ch.component(k) for k in range(ctx.size)]
    coeffs: List[Fraction] = [Fraction(1)]
    for k in range(1, ctx.size):
        total = Fraction(0)
        for i in range(1, k + 1):
            total += (-1) ** (i - 1) * _graded_product(k - i, coeffs[k - i], i, power_sums[i])
        coeffs.append(total / k)
    return TotalChernClass(CohClass(ctx, tuple(coeffs)))


def is_formal_only(ch: ChernCharacter) -> bool:
    """Rank-0 (torsion) characters have no meaningful total Chern class"""
    return ch.rank == 0


def is_divided_power_profile(rank: int, c: TotalChernClass) -> bool:
    """True iff c_i = c_1^i / i! for every i.

    The answer is computed twice, once from cup powers of c_1 and once as
    "ch_j = 0 for all j >= 2" on the converted character. The two must agree;
    a disagreement is an arithmetic bug, not a property of the input.
    """
    ctx = c.ctx
    c1 = c.value.homogeneous_part(1)
    power = CohClass.unit(ctx)
    by_powers = True
    for i in range(1, ctx.size):
        power = cup(power, c1)
        if power.component(i) / factorial(i) != c.component(i):
            by_powers = False
            break

    ch = chern_to_character(rank, c)
    by_character = all(ch.component(j) == 0 for j in range(2, ctx.size))
    if by_powers != by_character:
        raise InvariantViolationError(
            f"divided-power test ({by_powers}) and ch_j=0 test ({by_character}) disagree "
            f"for c = [{', '.join(format_rational_list(c.value.coeffs))}]"
        )
    return by_powers


def euler_characteristic(ch: ChernCharacter) -> Fraction:
    """chi = integral of ch; the Todd class of an abelian variety is 1"""
    return integrate(ch.value)


def line_bundle_character(n: int, ctx: PpavContext) -> ChernCharacter:
    """ch(O(n Theta)) = e^(n theta)"""
    return ChernCharacter(CohClass.exponential(ctx, n))


def total_chern_class(ctx: PpavContext, values) -> TotalChernClass:
    return TotalChernClass(CohClass.from_values(ctx, values, "c"))


def divided_power_exponential(ctx: PpavContext, t) -> TotalChernClass:
    """c = e^(t theta): the profile c_i = c_1^i/i! with c_1 = t theta"""
    return TotalChernClass(CohClass.exponential(ctx, t))
