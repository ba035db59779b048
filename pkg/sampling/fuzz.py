"""
Seeded random inputs for property checks.

numpy draws the integers; everything handed to the engine is an exact
Fraction built from them.
"""
from fractions import Fraction
from typing import Optional

import numpy as np

from chern.calculus import ChernCharacter, TotalChernClass
from cohomology.coh_class import CohClass
from cohomology.context import PpavContext
from fourier_mukai.sheaf import SheafInvariant, Side


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, bound: int = 9, max_denominator: int = 6) -> Fraction:
    numerator = int(rng.integers(-bound, bound + 1))
    denominator = int(rng.integers(1, max_denominator + 1))
    return Fraction(numerator, denominator)


def random_class(ctx: PpavContext, rng: np.random.Generator, bound: int = 9) -> CohClass:
    return CohClass(ctx, tuple(random_rational(rng, bound) for _ in range(ctx.size)))


def random_total_chern(ctx: PpavContext, rng: np.random.Generator) -> TotalChernClass:
    coeffs = (Fraction(1),) + tuple(random_rational(rng) for _ in range(ctx.g))
    return TotalChernClass(CohClass(ctx, coeffs))


def random_profile(ctx: PpavContext, rng: np.random.Generator) -> TotalChernClass:
    """A total Chern class e^(t theta) with random rational t"""
    return TotalChernClass(CohClass.exponential(ctx, random_rational(rng)))


def perturbed_profile(ctx: PpavContext, rng: np.random.Generator) -> TotalChernClass:
    """e^(t theta) with one coefficient of degree >= 2 moved; never a profile"""
    base = list(CohClass.exponential(ctx, random_rational(rng)).coeffs)
    if ctx.g >= 2:
        index = int(rng.integers(2, ctx.g + 1))
        shift = random_rational(rng)
        base[index] += shift if shift else Fraction(1)
    return TotalChernClass(CohClass(ctx, tuple(base)))


def random_character(ctx: PpavContext, rng: np.random.Generator, max_rank: int = 10) -> ChernCharacter:
    coeffs = [Fraction(int(rng.integers(0, max_rank + 1)))]
    coeffs += [random_rational(rng) for _ in range(ctx.g)]
    return ChernCharacter(CohClass(ctx, tuple(coeffs)))


def random_sheaf(ctx: PpavContext, rng: np.random.Generator, max_rank: int = 10) -> SheafInvariant:
    """A sheaf invariant whose declared WIT index passes the rank rules.

    The rank and chi are drawn so that both transforms have non-negative
    integer rank, and WIT_0 / WIT_g members are non-zero where required.
    """
    g = ctx.g
    j = int(rng.integers(0, g + 1))
    rank = int(rng.integers(1 if j == g else 0, max_rank + 1))
    transform_rank = int(rng.integers(1 if j == 0 else 0, max_rank + 1))
    middle = [random_rational(rng) for _ in range(g - 1)]
    coeffs = [Fraction(rank)] + middle + [Fraction((-1) ** j * transform_rank)]
    side = Side.A if rng.integers(0, 2) == 0 else Side.A_HAT
    return SheafInvariant(ChernCharacter(CohClass(ctx, tuple(coeffs))), j, side)
