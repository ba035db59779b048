"""Text and JSON renderings of a CriterionReport."""
from typing import Any, Dict, List

import pandas as pd
import sympy

from reports.criterion_report import CriterionReport, plain_value
from storage.report_store import canonical_json, content_digest


def report_envelope(command: str, input_document: Dict[str, Any], report: CriterionReport) -> Dict[str, Any]:
    """The JSON document printed under --format json and accepted back by --spec"""
    body = {"command": command, "input": input_document, "report": report.to_dict()}
    return {**body, "digest": content_digest(body)}


def render_json(envelope: Dict[str, Any]) -> str:
    return canonical_json(envelope)


def checks_table(report: CriterionReport) -> pd.DataFrame:
    return pd.DataFrame(
        [check.to_dict() for check in report.checks],
        columns=["name", "status", "detail"],
    )


def _derived_value(value: Any) -> str:
    plain = plain_value(value)
    if isinstance(plain, list):
        return ", ".join(str(item) for item in plain)
    if plain is None:
        return "-"
    return str(plain).lower() if isinstance(plain, bool) else str(plain)


def render_text(report: CriterionReport) -> str:
    lines: List[str] = [report.title, f"verdict: {report.verdict.value.upper()}"]
    for name, cls in report.classes.items():
        lines.append(f"{name} = {cls}    ({sympy.sstr(cls.to_sympy())})")
    for name, value in report.derived.items():
        lines.append(f"{name} = {_derived_value(value)}")
    if report.checks:
        lines.append("")
        lines.append(checks_table(report).to_string(index=False))
    if report.notes:
        lines.append("")
        lines.extend(f"note: {text}" for text in report.notes)
    return "\n".join(lines) + "\n"
