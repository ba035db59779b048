from dataclasses import dataclass
from enum import Enum
from typing import Any, Mapping, Optional

from chern.calculus import ChernCharacter
from cohomology.coh_class import CohClass
from cohomology.context import PpavContext
from cohomology.errors import InputError, RankError
from cohomology.rationals import to_integer


class Side(str, Enum):
    """Which variety a sheaf lives on, and so which functor transforms it."""
    A = "A"
    A_HAT = "A-hat"

    @property
    def functor(self) -> str:
        return "Phi" if self is Side.A else "Phi-hat"

    def flipped(self) -> "Side":
        return Side.A_HAT if self is Side.A else Side.A

    @classmethod
    def parse(cls, value: Any, field: str = "side") -> "Side":
        try:
            return cls(value)
        except ValueError:
            raise InputError(f"side must be 'A' or 'A-hat', got {value!r}", field)


@dataclass(frozen=True)
class SheafInvariant:
    """Numerical shadow of a coherent sheaf: its Chern character, a declared
    WIT index and the side it lives on.

    Construction accepts any declaration; check_wit_rules reports the ones
    that cannot hold.
    """
    ch: ChernCharacter
    wit_index: Optional[int] = None
    side: Side = Side.A

    @property
    def ctx(self) -> PpavContext:
        return self.ch.ctx

    @property
    def rank(self) -> int:
        return self.ch.rank

    def to_json(self) -> dict:
        return {
            "g": self.ctx.g,
            "ch": self.ch.value.to_json(),
            "wit": self.wit_index,
            "side": self.side.value,
        }

    @classmethod
    def from_json(cls, doc: Mapping[str, Any], pointer: str = "$") -> "SheafInvariant":
        if not isinstance(doc, Mapping):
            raise InputError("expected a sheaf object", pointer)
        unknown = sorted(set(doc) - {"g", "ch", "wit", "side"})
        if unknown:
            raise InputError(f"unknown field {unknown[0]!r}", f"{pointer}.{unknown[0]}")
        for key in ("g", "ch"):
            if key not in doc:
                raise InputError("missing required field", f"{pointer}.{key}")
        ctx = PpavContext(to_integer(doc["g"], f"{pointer}.g"))
        if not isinstance(doc["ch"], list):
            raise InputError("expected an array of rationals", f"{pointer}.ch")
        try:
            ch = ChernCharacter(CohClass.from_values(ctx, doc["ch"], f"{pointer}.ch"))
        except RankError as exc:
            raise InputError(str(exc), f"{pointer}.ch[0]")
        wit = doc.get("wit")
        wit_index = None if wit is None else to_integer(wit, f"{pointer}.wit")
        side = Side.parse(doc.get("side", Side.A.value), f"{pointer}.side")
        return cls(ch=ch, wit_index=wit_index, side=side)
