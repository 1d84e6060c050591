"""JSON/CSV report emission and the on-disk report cache."""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Any

from . import __version__
from .invariants import InvariantReport
from .limit import Verdict
from .ring import render_monomial

SCHEMA_VERSION = 1

_BIDEGREE = {
    "type": "object",
    "properties": {"sigma": {"type": "integer", "minimum": 0}, "d": {"type": "integer", "minimum": 0}},
    "required": ["sigma", "d"],
    "additionalProperties": False,
}

_STRINGS = {"type": "array", "items": {"type": "string"}}

BIDEGREE_REPORT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "schema": {"const": SCHEMA_VERSION},
        "command": {"type": "string"},
        "version": {"type": "string"},
        "bidegree": _BIDEGREE,
        "ambient_dim": {"type": "integer", "minimum": 0},
        "invariant_dim": {"type": "integer", "minimum": 0},
        "basis": _STRINGS,
        "invariant_basis": _STRINGS,
        "monomial_invariants": _STRINGS,
        "constraining_k": {"type": "array", "items": {"type": "integer"}},
        "verdict": {"type": "string"},
        "limit_dim": {"type": "integer", "minimum": 0},
        "elapsed_ms": {"type": "integer", "minimum": 0},
    },
    "required": ["schema", "command", "elapsed_ms"],
}

SCAN_ITEM_SCHEMA: dict[str, Any] = {
    **BIDEGREE_REPORT_SCHEMA,
    "required": ["bidegree", "ambient_dim", "invariant_dim", "invariant_basis"],
}

#: Published JSON Schema for every report the CLI writes.
REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "steenrod-invariants report",
    "oneOf": [
        {**BIDEGREE_REPORT_SCHEMA, "required": ["schema", "command", "bidegree", "elapsed_ms"]},
        {
            "type": "object",
            "properties": {
                "schema": {"const": SCHEMA_VERSION},
                "command": {"type": "string"},
                "version": {"type": "string"},
                "window": {"type": "object"},
                "reports": {"type": "array", "items": SCAN_ITEM_SCHEMA},
                "checks": {"type": "array"},
                "result": {},
                "elapsed_ms": {"type": "integer", "minimum": 0},
            },
            "required": ["schema", "command", "elapsed_ms"],
            "anyOf": [{"required": ["reports"]}, {"required": ["checks"]}, {"required": ["result"]}],
        },
    ],
}


def header(command: str) -> dict[str, Any]:
    return {"schema": SCHEMA_VERSION, "command": command, "version": __version__}


def invariant_report_dict(report: InvariantReport, command: str = "invariants") -> dict[str, Any]:
    out = header(command)
    out.update(
        {
            "bidegree": {"sigma": report.bidegree.sigma, "d": report.bidegree.d},
            "ambient_dim": report.ambient_dim,
            "invariant_dim": report.invariant_dim,
            "basis": [render_monomial(m) for m in report.basis],
            "invariant_basis": [str(p) for p in report.invariant_basis],
            "monomial_invariants": [render_monomial(m) for m in report.monomial_invariants],
            "constraining_k": list(report.constraining_k),
        }
    )
    return out


def verdict_dict(verdict: Verdict) -> dict[str, Any]:
    out = header("limit-compare")
    out.update(
        {
            "bidegree": {"sigma": verdict.bidegree.sigma, "d": verdict.bidegree.d},
            "ambient_dim": verdict.ring_dim,
            "limit_dim": verdict.limit_dim,
            "verdict": "iso" if verdict.iso else "not-iso",
        }
    )
    return out


def finish(payload: dict[str, Any], elapsed_ms: int) -> dict[str, Any]:
    payload["elapsed_ms"] = int(elapsed_ms)
    return payload


def dumps(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=True) + "\n"


CSV_FIELDS = ["sigma", "d", "ambient_dim", "invariant_dim", "invariant_basis"]


def reports_csv(rows: list[dict[str, Any]]) -> str:
    """One bidegree per row; invariant basis elements joined by ``;``."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in rows:
        writer.writerow(
            [
                r["bidegree"]["sigma"],
                r["bidegree"]["d"],
                r["ambient_dim"],
                r["invariant_dim"],
                ";".join(r["invariant_basis"]),
            ]
        )
    return buf.getvalue()


def _checksum(report: dict[str, Any]) -> str:
    blob = json.dumps(report, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


class ReportCache:
    """Per-bidegree reports on disk, keyed by schema version, bidegree and window config.

    Entries whose checksum does not match, or a file that fails to parse, are
    treated as misses.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self.entries: dict[str, dict[str, Any]] = {}
        self.dirty = False
        try:
            data = json.loads(self.path.read_text())
            if isinstance(data, dict) and isinstance(data.get("entries"), dict):
                self.entries = data["entries"]
        except (OSError, ValueError):
            self.entries = {}

    @staticmethod
    def key(sigma: int, d: int, config: dict[str, Any]) -> str:
        cfg = ",".join(f"{k}={config[k]}" for k in sorted(config))
        return f"v{SCHEMA_VERSION}:{sigma}:{d}:{cfg}"

    def get(self, key: str) -> dict[str, Any] | None:
        entry = self.entries.get(key)
        if not isinstance(entry, dict) or "report" not in entry:
            return None
        if entry.get("checksum") != _checksum(entry["report"]):
            return None
        return entry["report"]

    def put(self, key: str, report: dict[str, Any]) -> None:
        self.entries[key] = {"checksum": _checksum(report), "report": report}
        self.dirty = True

    def save(self) -> None:
        if not self.dirty:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=self.path.name, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump({"schema": SCHEMA_VERSION, "entries": self.entries}, fh, sort_keys=True)
        os.replace(tmp, self.path)
        self.dirty = False


def scan_item(report: InvariantReport) -> dict[str, Any]:
    """Per-bidegree entry of a scan report (no header, no timing)."""
    item = invariant_report_dict(report)
    for key in ("schema", "command", "version"):
        item.pop(key)
    return item
