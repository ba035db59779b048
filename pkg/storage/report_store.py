"""Reading spec files and writing report files as canonical JSON."""
import hashlib
import json
import logging
from pathlib import Path
from typing import Any

from cohomology.errors import InputError

logger = logging.getLogger(__name__)


def canonical_json(document: Any, indent: int = 2) -> str:
    """Deterministic JSON: sorted keys, fixed indentation, trailing newline"""
    return json.dumps(document, sort_keys=True, indent=indent, ensure_ascii=False) + "\n"


def content_digest(document: Any) -> str:
    """sha256 of the compact canonical form; identical reports share a digest"""
    compact = json.dumps(document, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(compact.encode("utf-8")).hexdigest()[:16]


class ReportStore:
    def write(self, path: str, document: Any) -> str:
        """Write a document as canonical JSON and return its digest"""
        digest = content_digest(document)
        try:
            Path(path).write_text(canonical_json(document), encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write report file: {exc.strerror}", path)
        logger.info("wrote report %s to %s", digest, path)
        return digest

    def read(self, path: str) -> Any:
        """Load a JSON spec file; unreadable or malformed files are input errors"""
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read spec file: {exc.strerror}", path)
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON at line {exc.lineno} column {exc.colno}", path)


report_store = ReportStore()
