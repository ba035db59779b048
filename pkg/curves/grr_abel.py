"""
Invariants of line bundles on a curve C pushed into its Jacobian by the
Abel map a: C -> J(C).

With [C] = theta^(g-1)/(g-1)!, td(J(C)) = 1 and td(C) = 1 - (g-1)[pt_C],
Grothendieck-Riemann-Roch gives for L of degree d

    ch(a_* L) = a_*((1 + d [pt_C]) (1 - (g-1) [pt_C])) = [C] + (d - g + 1) [pt].

Base points and the identifications J_d(C) = J(C) are ignored; a Picard
variety is known by its degree alone.
"""
import logging
from dataclasses import dataclass
from typing import Any, Mapping

from chern.calculus import ChernCharacter
from cohomology.coh_class import CohClass
from cohomology.context import PpavContext
from cohomology.errors import DegreeError, InputError
from cohomology.rationals import to_integer
from config.settings import MAX_G_ENV, max_g

logger = logging.getLogger(__name__)


def check_genus(genus: int, pointer: str) -> int:
    cap = max_g()
    if not 1 <= genus <= cap:
        raise InputError(f"genus must lie in [1, {cap}] (cap set by {MAX_G_ENV}), got {genus}", pointer)
    return genus


@dataclass(frozen=True)
class CurveLineBundleSpec:
    genus: int
    degree: int

    def __post_init__(self):
        if isinstance(self.genus, bool) or not isinstance(self.genus, int) or self.genus < 1:
            raise InputError(f"genus must be a positive integer, got {self.genus!r}", "genus")
        if isinstance(self.degree, bool) or not isinstance(self.degree, int):
            raise InputError(f"degree must be an integer, got {self.degree!r}", "degree")

    @property
    def ctx(self) -> PpavContext:
        """The Jacobian, a p.p.a.v. of dimension equal to the genus"""
        return PpavContext(self.genus)

    @property
    def canonical_degree(self) -> int:
        """deg K_C = deg omega_C = 2g - 2"""
        return 2 * self.genus - 2

    def to_json(self) -> dict:
        return {"genus": self.genus, "degree": self.degree}

    @classmethod
    def from_json(cls, doc: Mapping[str, Any], pointer: str = "$") -> "CurveLineBundleSpec":
        if not isinstance(doc, Mapping):
            raise InputError("expected a curve line bundle object", pointer)
        unknown = sorted(set(doc) - {"genus", "degree"})
        if unknown:
            raise InputError(f"unknown field {unknown[0]!r}", f"{pointer}.{unknown[0]}")
        for key in ("genus", "degree"):
            if key not in doc:
                raise InputError("missing required field", f"{pointer}.{key}")
        return cls(
            genus=check_genus(to_integer(doc["genus"], f"{pointer}.genus"), f"{pointer}.genus"),
            degree=to_integer(doc["degree"], f"{pointer}.degree"),
        )


def is_degenerate_genus(spec: CurveLineBundleSpec) -> bool:
    """Genus 1 is accepted, but the curve is then its own Jacobian"""
    return spec.genus < 2


def curve_chi(spec: CurveLineBundleSpec) -> int:
    """Riemann-Roch on C: chi(L) = d - g + 1"""
    return spec.degree - spec.genus + 1


def abel_pushforward(spec: CurveLineBundleSpec) -> ChernCharacter:
    ctx = spec.ctx
    pushed = CohClass.minimal(ctx) + CohClass.point(ctx) * curve_chi(spec)
    logger.debug("ch(a_* L) for g=%d, d=%d: %s", spec.genus, spec.degree, pushed)
    return ChernCharacter(pushed)


def serre_dual_degree(spec: CurveLineBundleSpec) -> CurveLineBundleSpec:
    """Degree of L^* (x) omega_C"""
    return CurveLineBundleSpec(spec.genus, spec.canonical_degree - spec.degree)


def support_line_bundle(ch: ChernCharacter) -> CurveLineBundleSpec:
    """Recover L from ch(a_* L) = [C] + chi [pt].

    GRR for a line bundle G on the support curve gives
    a_*(c_1(G) - K_C / 2) = chi, so deg G = chi + g - 1.
    """
    ctx = ch.ctx
    g = ctx.g
    for degree in range(g - 1):
        if ch.component(degree) != 0:
            raise DegreeError(
                f"ch_{degree} = {ch.component(degree)}; a sheaf supported on a curve "
                f"has no components below degree {g - 1}"
            )
    if ch.component(g - 1) != 1:
        raise DegreeError(
            f"ch_{g - 1} = {ch.component(g - 1)} is not the minimal class"
        )
    chi = ch.component(g)
    if chi.denominator != 1:
        raise DegreeError(f"chi = {chi} is not an integer")
    return CurveLineBundleSpec(g, int(chi) + g - 1)
