"""
Truncated exp/log in the divided-power basis.

Coefficients of theta^i/i! multiply exactly like the coefficients of an
exponential generating function, so the ring H*(A) restricted to theta is
Q[u]/(u^(g+1)) with EGF products. Differentiation is a left shift, which
turns log and exp into first-order recursions.

Splitting c_t = prod (1 + x_i t) and taking logarithms gives

    log c_t = ch_1 t - ch_2 t^2 + 2 ch_3 t^3 - ... = sum (-1)^(k-1) (k-1)! ch_k t^k

so these routines are an independent route from Chern classes to the
Chern character, used to cross-check the Newton identities.
"""
from fractions import Fraction
from math import factorial
from typing import Sequence, Tuple

from cohomology.coh_class import CohClass, binomial_row
from cohomology.errors import InvariantViolationError


def series_log(coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """log of a series with constant term 1, solved from c * (log c)' = c'"""
    if coeffs[0] != 1:
        raise InvariantViolationError("log needs constant term 1")
    top = len(coeffs) - 1
    derivative = [Fraction(0)] * top
    for k in range(top):
        value = coeffs[k + 1]
        row = binomial_row(k)
        for i in range(k):
            value -= row[i] * coeffs[k - i] * derivative[i]
        derivative[k] = value
    return (Fraction(0),) + tuple(derivative)


def series_exp(coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """exp of a series with constant term 0, solved from E' = E * L'"""
    if coeffs[0] != 0:
        raise InvariantViolationError("exp needs constant term 0")
    top = len(coeffs) - 1
    out = [Fraction(1)] + [Fraction(0)] * top
    for k in range(top):
        row = binomial_row(k)
        out[k + 1] = sum(
            (row[i] * out[k - i] * coeffs[i + 1] for i in range(k + 1)),
            Fraction(0),
        )
    return tuple(out)


def log_character(rank: int, c: CohClass) -> CohClass:
    """Chern character read off log of the total Chern class"""
    logarithm = series_log(c.coeffs)
    ch = [Fraction(rank)]
    for k in range(1, c.ctx.size):
        ch.append((-1) ** (k - 1) * logarithm[k] / factorial(k - 1))
    return CohClass(c.ctx, tuple(ch))


def exp_chern(ch: CohClass) -> CohClass:
    """Total Chern class as exp of sum (-1)^(k-1) (k-1)! ch_k"""
    logarithm = [Fraction(0)]
    for k in range(1, ch.ctx.size):
        logarithm.append((-1) ** (k - 1) * factorial(k - 1) * ch.coeffs[k])
    return CohClass(ch.ctx, series_exp(logarithm))
