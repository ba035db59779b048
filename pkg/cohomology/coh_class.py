"""
Exact arithmetic in the sub-ring of H*(A, Q) generated by the theta class.

A class is stored by its coefficients in the divided-power basis theta^i/i!,
i = 0..g. In this basis the cup product is the binomial convolution

    theta^i/i! . theta^j/j! = C(i+j, i) theta^(i+j)/(i+j)!

and Poincare duality is coefficient reversal. Degrees above g vanish on A
and are dropped without comment.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, Iterable, List, Sequence, Tuple

import sympy

from cohomology.context import PpavContext
from cohomology.errors import ContextMismatchError, InputError, InvariantViolationError
from cohomology.rationals import format_rational_list, to_fraction

THETA = sympy.Symbol("theta")


@lru_cache(maxsize=None)
def binomial_row(k: int) -> Tuple[int, ...]:
    return tuple(comb(k, i) for i in range(k + 1))


@dataclass(frozen=True)
class CohClass:
    ctx: PpavContext
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.ctx.size:
            raise InvariantViolationError(
                f"a class on a {self.ctx.g}-dimensional p.p.a.v. needs "
                f"{self.ctx.size} coefficients, got {len(self.coeffs)}"
            )
        for value in self.coeffs:
            if not isinstance(value, Fraction):
                raise InvariantViolationError(
                    f"coefficients must be Fractions, got {type(value).__name__}"
                )

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_values(cls, ctx: PpavContext, values: Iterable[Any], field: str = "coeffs") -> "CohClass":
        """Build a class from ints, Fractions or "p/q" strings"""
        values = list(values)
        if len(values) != ctx.size:
            raise InputError(
                f"expected {ctx.size} coefficients for g={ctx.g}, got {len(values)}", field
            )
        return cls(ctx, tuple(to_fraction(v, f"{field}[{i}]") for i, v in enumerate(values)))

    @classmethod
    def zero(cls, ctx: PpavContext) -> "CohClass":
        return cls(ctx, (Fraction(0),) * ctx.size)

    @classmethod
    def homogeneous(cls, ctx: PpavContext, degree: int, value: Any = 1) -> "CohClass":
        """value * theta^degree / degree!"""
        if not 0 <= degree <= ctx.g:
            raise InputError(f"degree must lie in [0, {ctx.g}], got {degree}", "degree")
        coeffs = [Fraction(0)] * ctx.size
        coeffs[degree] = to_fraction(value)
        return cls(ctx, tuple(coeffs))

    @classmethod
    def unit(cls, ctx: PpavContext) -> "CohClass":
        return cls.homogeneous(ctx, 0)

    @classmethod
    def theta(cls, ctx: PpavContext) -> "CohClass":
        return cls.homogeneous(ctx, 1)

    @classmethod
    def point(cls, ctx: PpavContext) -> "CohClass":
        """Fundamental class of a point, theta^g/g!"""
        return cls.homogeneous(ctx, ctx.g)

    @classmethod
    def minimal(cls, ctx: PpavContext) -> "CohClass":
        """theta^(g-1)/(g-1)!, the class of an Abel-embedded curve"""
        return cls.homogeneous(ctx, ctx.g - 1)

    @classmethod
    def exponential(cls, ctx: PpavContext, n: Any) -> "CohClass":
        """e^(n theta); its divided-power coefficients are n^i"""
        n = to_fraction(n, "n")
        return cls(ctx, tuple(n ** i for i in range(ctx.size)))

    # -- accessors --------------------------------------------------------

    @property
    def g(self) -> int:
        return self.ctx.g

    def component(self, degree: int) -> Fraction:
        return self.coeffs[degree]

    def homogeneous_part(self, degree: int) -> "CohClass":
        return CohClass.homogeneous(self.ctx, degree, self.coeffs[degree])

    def is_homogeneous(self, degree: int) -> bool:
        return all(value == 0 for i, value in enumerate(self.coeffs) if i != degree)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- operator sugar ---------------------------------------------------

    def __add__(self, other: "CohClass") -> "CohClass":
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other: "CohClass") -> "CohClass":
        return linear_combine([(1, self), (-1, other)])

    def __neg__(self) -> "CohClass":
        return linear_combine([(-1, self)])

    def __mul__(self, scalar: Any) -> "CohClass":
        return linear_combine([(scalar, self)])

    __rmul__ = __mul__

    def __matmul__(self, other: "CohClass") -> "CohClass":
        return cup(self, other)

    # -- rendering --------------------------------------------------------

    def to_json(self) -> List[str]:
        return format_rational_list(self.coeffs)

    def to_sympy(self) -> sympy.Expr:
        """The class as a polynomial in theta (monomial basis)"""
        return sympy.Add(*[
            sympy.Rational(value.numerator, value.denominator) * THETA ** i / sympy.factorial(i)
            for i, value in enumerate(self.coeffs)
        ])

    def __str__(self):
        return ", ".join(self.to_json())


def _require_same_context(classes: Sequence[CohClass]) -> PpavContext:
    ctx = classes[0].ctx
    for other in classes[1:]:
        if other.ctx != ctx:
            raise ContextMismatchError(
                f"cannot combine classes on p.p.a.v.s of dimension {ctx.g} and {other.ctx.g}"
            )
    return ctx


def linear_combine(terms: Sequence[Tuple[Any, CohClass]]) -> CohClass:
    """Componentwise sum of scalar * class over the given terms"""
    if not terms:
        raise InputError("linear_combine needs at least one term", "terms")
    ctx = _require_same_context([cls for _, cls in terms])
    totals = [Fraction(0)] * ctx.size
    for scalar, cls in terms:
        scalar = to_fraction(scalar, "scalar")
        if not scalar:
            continue
        for i, value in enumerate(cls.coeffs):
            totals[i] += scalar * value
    return CohClass(ctx, tuple(totals))


def cup(a: CohClass, b: CohClass) -> CohClass:
    """Cup product, truncated above degree g"""
    ctx = _require_same_context([a, b])
    out = [Fraction(0)] * ctx.size
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(ctx.size - i):
            y = b.coeffs[j]
            if y:
                out[i + j] += binomial_row(i + j)[i] * x * y
    return CohClass(ctx, tuple(out))


def integrate(a: CohClass) -> Fraction:
    """Evaluate against the fundamental class; the point class integrates to 1"""
    return a.coeffs[a.ctx.g]


def poincare_dual(a: CohClass) -> CohClass:
    """PD(theta^k/k!) = theta^(g-k)/(g-k)!"""
    return CohClass(a.ctx, tuple(reversed(a.coeffs)))


def cup_power(a: CohClass, n: int) -> CohClass:
    result = CohClass.unit(a.ctx)
    for _ in range(n):
        result = cup(result, a)
    return result


def divided_power(a: CohClass, n: int) -> CohClass:
    """a^n / n!"""
    return linear_combine([(Fraction(1, factorial(n)), cup_power(a, n))])
