"""
Typed command inputs.

Every command input can come from inline flags or from a JSON document; both
routes produce the same dataclass, and `to_document` gives the normalized
JSON form that is echoed in reports and accepted back by --spec.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, List, Mapping, Optional, Tuple

from chern.calculus import ChernCharacter, TotalChernClass
from cohomology.coh_class import CohClass
from cohomology.context import PpavContext
from cohomology.errors import InputError, InvariantViolationError, RankError
from cohomology.rationals import format_rational, parse_rational_list, to_fraction, to_integer
from curves.grr_abel import CurveLineBundleSpec, check_genus
from fourier_mukai.sheaf import SheafInvariant, Side


def check_fields(doc: Any, pointer: str, required: Iterable[str], optional: Iterable[str] = ()) -> None:
    if not isinstance(doc, Mapping):
        raise InputError("expected a JSON object", pointer)
    required = tuple(required)
    allowed = set(required) | set(optional)
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise InputError(f"unknown field {unknown[0]!r}", f"{pointer}.{unknown[0]}")
    for key in required:
        if key not in doc:
            raise InputError("missing required field", f"{pointer}.{key}")


def require_flag(value: Any, flag: str) -> Any:
    if value is None:
        raise InputError("required flag is missing", flag)
    return value


def _flag_list(value: Any, flag: str) -> List[Fraction]:
    return parse_rational_list(require_flag(value, flag), flag)


def _context(value: Any, pointer: str) -> PpavContext:
    try:
        return PpavContext(to_integer(value, pointer))
    except InputError as exc:
        raise InputError(exc.reason, pointer)


def _class(ctx: PpavContext, values: Any, pointer: str) -> CohClass:
    if not isinstance(values, list):
        raise InputError("expected an array of rationals", pointer)
    return CohClass.from_values(ctx, values, pointer)


def _total_chern(ctx: PpavContext, values: Any, pointer: str) -> TotalChernClass:
    cls = _class(ctx, values, pointer)
    try:
        return TotalChernClass(cls)
    except InvariantViolationError as exc:
        raise InputError(str(exc), f"{pointer}[0]")


def _character(ctx: PpavContext, values: Any, pointer: str) -> ChernCharacter:
    cls = _class(ctx, values, pointer)
    try:
        return ChernCharacter(cls)
    except RankError as exc:
        raise InputError(str(exc), f"{pointer}[0]")


def _boolean(value: Any, pointer: str) -> bool:
    if not isinstance(value, bool):
        raise InputError("expected true or false", pointer)
    return value


@dataclass(frozen=True)
class ChernToCharacterInput:
    rank: int
    c: TotalChernClass

    @classmethod
    def from_document(cls, doc: Any, pointer: str = "$") -> "ChernToCharacterInput":
        check_fields(doc, pointer, ("g", "rank", "c"))
        ctx = _context(doc["g"], f"{pointer}.g")
        rank = to_integer(doc["rank"], f"{pointer}.rank")
        if rank < 0:
            raise InputError("rank must be non-negative", f"{pointer}.rank")
        return cls(rank, _total_chern(ctx, doc["c"], f"{pointer}.c"))

    @classmethod
    def from_flags(cls, args) -> "ChernToCharacterInput":
        ctx = _context(require_flag(args.g, "--g"), "--g")
        rank = to_integer(require_flag(args.rank, "--rank"), "--rank")
        if rank < 0:
            raise InputError("rank must be non-negative", "--rank")
        return cls(rank, _total_chern(ctx, _flag_list(args.c, "--c"), "--c"))

    def to_document(self) -> dict:
        return {"g": self.c.ctx.g, "rank": self.rank, "c": self.c.value.to_json()}


@dataclass(frozen=True)
class CharacterToChernInput:
    ch: ChernCharacter

    @classmethod
    def from_document(cls, doc: Any, pointer: str = "$") -> "CharacterToChernInput":
        check_fields(doc, pointer, ("g", "ch"), ("basis",))
        ctx = _context(doc["g"], f"{pointer}.g")
        return cls(_character(ctx, doc["ch"], f"{pointer}.ch"))

    @classmethod
    def from_flags(cls, args) -> "CharacterToChernInput":
        ctx = _context(require_flag(args.g, "--g"), "--g")
        return cls(_character(ctx, _flag_list(args.ch, "--ch"), "--ch"))

    def to_document(self) -> dict:
        return {"g": self.ch.ctx.g, "ch": self.ch.value.to_json()}


@dataclass(frozen=True)
class TransformInput:
    sheaf: SheafInvariant

    @classmethod
    def from_document(cls, doc: Any, pointer: str = "$") -> "TransformInput":
        return cls(SheafInvariant.from_json(doc, pointer))

    @classmethod
    def from_flags(cls, args) -> "TransformInput":
        ctx = _context(require_flag(args.g, "--g"), "--g")
        ch = _character(ctx, _flag_list(args.ch, "--ch"), "--ch")
        wit = None if args.wit is None else to_integer(args.wit, "--wit")
        side = Side.parse(args.side or Side.A.value, "--side")
        return cls(SheafInvariant(ch, wit, side))

    def to_document(self) -> dict:
        return self.sheaf.to_json()


@dataclass(frozen=True)
class CurveInput:
    spec: CurveLineBundleSpec

    @classmethod
    def from_document(cls, doc: Any, pointer: str = "$") -> "CurveInput":
        return cls(CurveLineBundleSpec.from_json(doc, pointer))

    @classmethod
    def from_flags(cls, args) -> "CurveInput":
        genus = to_integer(require_flag(args.genus, "--genus"), "--genus")
        degree = to_integer(require_flag(args.degree, "--degree"), "--degree")
        return cls(CurveLineBundleSpec(check_genus(genus, "--genus"), degree))

    def to_document(self) -> dict:
        return self.spec.to_json()


@dataclass(frozen=True)
class JacobianInput:
    rank: int
    c: TotalChernClass
    wit_g: bool
    indecomposable_ppav: bool = True
    indecomposable_sheaf: bool = True

    @property
    def ctx(self) -> PpavContext:
        return self.c.ctx

    @classmethod
    def from_document(cls, doc: Any, pointer: str = "$") -> "JacobianInput":
        check_fields(doc, pointer, ("g", "rank", "c", "wit_g"),
                     ("indecomposable_ppav", "indecomposable_sheaf"))
        ctx = _context(doc["g"], f"{pointer}.g")
        return cls(
            rank=to_integer(doc["rank"], f"{pointer}.rank"),
            c=_total_chern(ctx, doc["c"], f"{pointer}.c"),
            wit_g=_boolean(doc["wit_g"], f"{pointer}.wit_g"),
            indecomposable_ppav=_boolean(doc.get("indecomposable_ppav", True),
                                         f"{pointer}.indecomposable_ppav"),
            indecomposable_sheaf=_boolean(doc.get("indecomposable_sheaf", True),
                                          f"{pointer}.indecomposable_sheaf"),
        )

    @classmethod
    def from_flags(cls, args) -> "JacobianInput":
        ctx = _context(require_flag(args.g, "--g"), "--g")
        return cls(
            rank=to_integer(require_flag(args.rank, "--rank"), "--rank"),
            c=_total_chern(ctx, _flag_list(args.c, "--c"), "--c"),
            wit_g=bool(args.wit_g),
            indecomposable_ppav=not args.decomposable_ppav,
            indecomposable_sheaf=not args.decomposable_sheaf,
        )

    def to_document(self) -> dict:
        return {
            "g": self.ctx.g,
            "rank": self.rank,
            "c": self.c.value.to_json(),
            "wit_g": self.wit_g,
            "indecomposable_ppav": self.indecomposable_ppav,
            "indecomposable_sheaf": self.indecomposable_sheaf,
        }


@dataclass(frozen=True)
class PicardInput:
    ctx: PpavContext

    @classmethod
    def from_document(cls, doc: Any, pointer: str = "$") -> "PicardInput":
        check_fields(doc, pointer, ("g",))
        return cls(_context(doc["g"], f"{pointer}.g"))

    @classmethod
    def from_flags(cls, args) -> "PicardInput":
        return cls(_context(require_flag(args.g, "--g"), "--g"))

    def to_document(self) -> dict:
        return {"g": self.ctx.g}


@dataclass(frozen=True)
class SequenceInput:
    sub: SheafInvariant
    total: SheafInvariant
    quot: SheafInvariant

    @classmethod
    def from_document(cls, doc: Any, pointer: str = "$") -> "SequenceInput":
        check_fields(doc, pointer, ("sub", "total", "quot"))
        return cls(*(SheafInvariant.from_json(doc[name], f"{pointer}.{name}")
                     for name in ("sub", "total", "quot")))

    @classmethod
    def from_flags(cls, args) -> "SequenceInput":
        ctx = _context(require_flag(args.g, "--g"), "--g")
        wit = to_integer(require_flag(args.wit, "--wit"), "--wit")
        side = Side.parse(args.side or Side.A.value, "--side")
        members = []
        for name in ("sub", "total", "quot"):
            flag = f"--{name}"
            ch = _character(ctx, _flag_list(getattr(args, name), flag), flag)
            members.append(SheafInvariant(ch, wit, side))
        return cls(*members)

    def to_document(self) -> dict:
        return {name: getattr(self, name).to_json() for name in ("sub", "total", "quot")}


@dataclass(frozen=True)
class Perturbation:
    """Shift one coefficient of a golden vector, to prove a check can fail."""
    check: str
    index: int
    delta: Fraction
    genus: Optional[int] = None

    @classmethod
    def parse(cls, text: Any, pointer: str = "--perturb") -> "Perturbation":
        if not isinstance(text, str):
            raise InputError("expected CHECK:INDEX:DELTA[@G]", pointer)
        body, _, genus = text.partition("@")
        parts = body.split(":")
        if len(parts) != 3 or not parts[0]:
            raise InputError(f"expected CHECK:INDEX:DELTA[@G], got {text!r}", pointer)
        index = to_integer(parts[1], pointer)
        if index < 0:
            raise InputError("index must be non-negative", pointer)
        delta = to_fraction(parts[2], pointer)
        return cls(
            check=parts[0],
            index=index,
            delta=delta,
            genus=to_integer(genus, pointer) if genus else None,
        )

    def to_text(self) -> str:
        text = f"{self.check}:{self.index}:{format_rational(self.delta)}"
        return f"{text}@{self.genus}" if self.genus is not None else text


@dataclass(frozen=True)
class VerifyInput:
    genera: Tuple[int, ...]
    perturbations: Tuple[Perturbation, ...] = field(default=())

    @staticmethod
    def _genera(values: List[Any], pointer: str) -> Tuple[int, ...]:
        if not values:
            raise InputError("the genus list must not be empty", pointer)
        genera = tuple(to_integer(value, f"{pointer}[{i}]") for i, value in enumerate(values))
        for i, g in enumerate(genera):
            _context(g, f"{pointer}[{i}]")
        return genera

    @classmethod
    def from_document(cls, doc: Any, pointer: str = "$", default_genera: Tuple[int, ...] = ()) -> "VerifyInput":
        check_fields(doc, pointer, (), ("genera", "perturb"))
        raw = doc.get("genera")
        if raw is None:
            genera = default_genera
        elif isinstance(raw, list):
            genera = cls._genera(raw, f"{pointer}.genera")
        else:
            raise InputError("expected an array of integers", f"{pointer}.genera")
        raw_perturb = doc.get("perturb", [])
        if not isinstance(raw_perturb, list):
            raise InputError("expected an array of strings", f"{pointer}.perturb")
        perturbations = tuple(
            Perturbation.parse(item, f"{pointer}.perturb[{i}]") for i, item in enumerate(raw_perturb)
        )
        return cls(genera, perturbations)

    @classmethod
    def from_flags(cls, args, default_genera: Tuple[int, ...] = ()) -> "VerifyInput":
        genera = default_genera
        if args.genera is not None:
            genera = cls._genera([part for part in args.genera.split(",")], "--genera")
        perturbations = tuple(Perturbation.parse(item) for item in (args.perturb or []))
        return cls(genera, perturbations)

    def to_document(self) -> dict:
        return {
            "genera": list(self.genera),
            "perturb": [p.to_text() for p in self.perturbations],
        }
