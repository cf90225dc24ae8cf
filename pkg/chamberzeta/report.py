"""Command results with their checks, rendered as JSON, text or CSV."""

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List

logger = logging.getLogger(__name__)

FORMATS = ('json', 'text', 'csv')


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class Report:
    command: str
    inputs: Dict[str, Any]
    results: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    columns: List[str] = field(default_factory=list)
    rows: List[list] = field(default_factory=list)
    lines: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, lhs, rhs) -> bool:
        """Record whether lhs == rhs."""
        passed = lhs == rhs
        self.checks.append(Check(name, passed, str(lhs), str(rhs)))
        if passed:
            logger.info(f"{self.command}: {name} passed")
        else:
            logger.warning(f"{self.command}: {name} FAILED: {lhs} != {rhs}")
        return passed

    def fail(self, name: str, message: str):
        self.checks.append(Check(name, False, message, ''))
        logger.warning(f"{self.command}: {name} FAILED: {message}")

    def to_json(self) -> dict:
        data = {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "checks": [c.to_json() for c in self.checks],
            "ok": self.ok,
        }
        if self.columns:
            data["table"] = {"columns": self.columns, "rows": self.rows}
        return data

    def render(self, fmt: str = 'json') -> str:
        if fmt == 'json':
            return json.dumps(self.to_json(), indent=2, sort_keys=True)
        if fmt == 'csv':
            return self._render_csv()
        if fmt == 'text':
            return self._render_text()
        raise ValueError(f"unknown format '{fmt}'")

    def _render_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        if self.columns:
            writer.writerow(self.columns)
            writer.writerows(self.rows)
        else:
            writer.writerow(["name", "passed", "lhs", "rhs"])
            for c in self.checks:
                writer.writerow([c.name, c.passed, c.lhs, c.rhs])
        return buffer.getvalue().rstrip('\n')

    def _render_text(self) -> str:
        out = [f"{self.command}: " + ", ".join(f"{k}={v}" for k, v in sorted(self.inputs.items()))]
        for key in sorted(self.results):
            value = self.results[key]
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            out.append(f"  {key}: {value}")
        if self.columns:
            out.append("  " + " | ".join(self.columns))
            for row in self.rows:
                out.append("  " + " | ".join(str(x) for x in row))
        out.extend(self.lines)
        for c in self.checks:
            mark = "✅" if c.passed else "❌"
            out.append(f"  {mark} {c.name}" + ("" if c.passed else f": {c.lhs} != {c.rhs}"))
        out.append("OK" if self.ok else "FAILED")
        return "\n".join(out)
