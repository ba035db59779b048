"""
Structured verdicts.

A ReportLedger collects check records while a criterion runs, the way a
ledger collects transactions, and freezes into an immutable CriterionReport.
The verdict is pass iff every recorded check passed; notes carry soft
warnings and statements that are asserted rather than computed.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Tuple

from cohomology.coh_class import CohClass
from cohomology.rationals import format_rational

logger = logging.getLogger(__name__)


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"


@dataclass(frozen=True)
class CheckRecord:
    name: str
    status: Status
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self) -> Dict[str, str]:
        return {"name": self.name, "status": self.status.value, "detail": self.detail}


def plain_value(value: Any) -> Any:
    """JSON-friendly form of a derived value; rationals become "p/q" strings"""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return value
    if isinstance(value, (list, tuple)):
        return [plain_value(item) for item in value]
    return str(value)


@dataclass(frozen=True)
class CriterionReport:
    title: str
    checks: Tuple[CheckRecord, ...] = ()
    derived: Mapping[str, Any] = field(default_factory=dict)
    classes: Mapping[str, CohClass] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def verdict(self) -> Status:
        return Status.PASS if self.passed else Status.FAIL

    @property
    def failures(self) -> List[CheckRecord]:
        return [check for check in self.checks if not check.passed]

    def check(self, name: str) -> CheckRecord:
        for record in self.checks:
            if record.name == name:
                return record
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "verdict": self.verdict.value,
            "checks": [check.to_dict() for check in self.checks],
            "derived": {name: plain_value(value) for name, value in self.derived.items()},
            "classes": {name: cls.to_json() for name, cls in self.classes.items()},
            "notes": list(self.notes),
        }


class ReportLedger:
    def __init__(self, title: str):
        self.title = title
        self.history: List[CheckRecord] = []
        self.derived: Dict[str, Any] = {}
        self.classes: Dict[str, CohClass] = {}
        self.notes: List[str] = []

    def record(self, name: str, ok: bool, detail: str = "") -> bool:
        """Append a check; returns ok so callers can branch on it"""
        status = Status.PASS if ok else Status.FAIL
        self.history.append(CheckRecord(name, status, detail))
        if not ok:
            logger.info("%s: check %s failed: %s", self.title, name, detail)
        return ok

    def derive(self, name: str, value: Any) -> None:
        self.derived[name] = value

    def attach(self, name: str, cls: CohClass) -> None:
        self.classes[name] = cls

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    def absorb(self, report: CriterionReport, prefix: str) -> bool:
        """Copy another report's checks under a name prefix; returns its verdict"""
        for check in report.checks:
            self.history.append(CheckRecord(f"{prefix}{check.name}", check.status, check.detail))
        for text in report.notes:
            self.note(text)
        return report.passed

    def build(self) -> CriterionReport:
        return CriterionReport(
            title=self.title,
            checks=tuple(self.history),
            derived=dict(self.derived),
            classes=dict(self.classes),
            notes=tuple(self.notes),
        )
