from dataclasses import dataclass

from cohomology.errors import InputError
from config.settings import MAX_G_ENV, max_g


@dataclass(frozen=True)
class PpavContext:
    """A principally polarized abelian variety (A, Theta), known by its dimension g.

    The polarization is implicit in the basis normalization: the integral of
    theta^g/g! is 1, i.e. chi(Theta) = 1.
    """
    g: int

    def __post_init__(self):
        if isinstance(self.g, bool) or not isinstance(self.g, int):
            raise InputError(f"dimension must be an integer, got {self.g!r}", "g")
        cap = max_g()
        if not 1 <= self.g <= cap:
            raise InputError(
                f"dimension must lie in [1, {cap}] (cap set by {MAX_G_ENV}), got {self.g}",
                "g",
            )

    @property
    def size(self) -> int:
        """Number of coefficients of a class: one per even degree 0..2g"""
        return self.g + 1

    @property
    def degenerate(self) -> bool:
        """True below genus 2, where the curve-theoretic statements degenerate"""
        return self.g < 2
