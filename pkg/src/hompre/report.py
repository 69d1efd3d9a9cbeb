"""Structured and human-readable reports produced by the command-line tool.

Basis labels are one-based here (``e1, e2, ...``); the library is zero-based.
Residuals and other scalars are written as ``"p/q"`` strings.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .algebra import Violation, ViolationReport
from .cohomology import CohomologyRow
from .formats import format_json
from .linalg import format_scalar

SCHEMA_VERSION = 1

_COHOMOLOGY_KEYS = ("degree", "dim_cochains", "dim_cocycles", "dim_coboundaries", "dim_cohomology")

REPORT_SCHEMA: dict = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "hompre report",
    "type": "object",
    "required": ["schema_version", "command", "status", "verdicts", "violations"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"type": "array", "items": {"type": "string"}},
        "status": {"enum": ["pass", "fail"]},
        "verdicts": {"type": "object", "additionalProperties": {"type": "boolean"}},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["identity", "basis", "residual"],
                "additionalProperties": False,
                "properties": {
                    "identity": {"type": "string"},
                    "basis": {"type": "array", "items": {"type": "integer", "minimum": 1}},
                    "residual": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
        "cohomology": {
            "type": "array",
            "items": {
                "type": "object",
                "required": list(_COHOMOLOGY_KEYS),
                "additionalProperties": False,
                "properties": {k: {"type": "integer", "minimum": 0} for k in _COHOMOLOGY_KEYS},
            },
        },
        "result": {"type": "object"},
    },
}


@dataclass
class Report:
    command: list[str]
    verdicts: dict[str, bool] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)
    cohomology: list[dict] | None = None
    result: dict | None = None

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def add(self, checks: ViolationReport, prefix: str = "") -> "Report":
        """Merge a library report; ``prefix`` separates reports on different objects."""
        for name, passed in checks.verdicts().items():
            key = prefix + name
            self.verdicts[key] = self.verdicts.get(key, True) and passed
        self.violations.extend(
            Violation(prefix + v.identity, v.basis, v.residual) for v in checks.violations)
        return self

    def set_verdict(self, name: str, passed: bool) -> "Report":
        self.verdicts[name] = bool(passed)
        return self

    def set_cohomology(self, rows: list[CohomologyRow]) -> "Report":
        self.cohomology = [{k: getattr(r, k) for k in _COHOMOLOGY_KEYS} for r in rows]
        return self


def to_dict(report: Report) -> dict:
    out: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": list(report.command),
        "status": "pass" if report.ok else "fail",
        "verdicts": dict(report.verdicts),
        "violations": [
            {
                "identity": v.identity,
                "basis": [i + 1 for i in v.basis],
                "residual": [format_scalar(x) for x in v.residual],
            }
            for v in report.violations
        ],
    }
    if report.cohomology is not None:
        out["cohomology"] = [dict(row) for row in report.cohomology]
    if report.result is not None:
        out["result"] = report.result
    return out


def from_dict(data: dict) -> Report:
    if data.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema version {data.get('schema_version')!r}")
    violations = [
        Violation(v["identity"], tuple(i - 1 for i in v["basis"]), tuple(Fraction(x) for x in v["residual"]))
        for v in data["violations"]
    ]
    return Report(list(data["command"]), dict(data["verdicts"]), violations,
                  data.get("cohomology"), data.get("result"))


def _basis_label(basis: tuple) -> str:
    if not basis:
        return "whole map"
    return "(" + ", ".join(f"e{i + 1}" for i in basis) + ")"


def format_human(report: Report) -> str:
    lines = [f"command: {' '.join(report.command)}"]
    if report.verdicts:
        width = max(len(k) for k in report.verdicts)
        lines.append("verdicts:")
        for name, passed in report.verdicts.items():
            lines.append(f"  {name.ljust(width)}  {'pass' if passed else 'FAIL'}")
    if report.cohomology is not None:
        header = ("n", "dim C^n", "dim Z^n", "dim B^n", "dim H^n")
        rows = [tuple(str(r[k]) for k in _COHOMOLOGY_KEYS) for r in report.cohomology]
        widths = [max(len(h), *(len(r[c]) for r in rows)) for c, h in enumerate(header)]
        lines.append("cohomology:")
        for row in [header] + rows:
            lines.append("  " + "  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    if report.result is not None:
        lines.append("result:")
        lines.extend("  " + line for line in format_json(report.result).splitlines())
    if report.violations:
        lines.append(f"{len(report.violations)} violation(s):")
        for v in report.violations:
            residual = ", ".join(format_scalar(x) for x in v.residual)
            lines.append(f"  {v.identity} at {_basis_label(v.basis)}: residual [{residual}]")
    if report.ok:
        lines.append("all identities verified")
    else:
        failed = [k for k, passed in report.verdicts.items() if not passed]
        lines.append(f"FAILED: {', '.join(failed)}")
    return "\n".join(lines) + "\n"


def emit_report(report: Report, fmt: str = "human") -> str:
    if fmt == "human":
        return format_human(report)
    if fmt == "json":
        return json.dumps(to_dict(report), indent=2) + "\n"
    raise ValueError(f"unknown report format {fmt!r}")
