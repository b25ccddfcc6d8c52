"""Report structures shared by the library and the CLI.

Reports are deterministic: suites sort by name, then parameters, then check
name, and timing fields are only populated on request so that two runs with
the same configuration and seed serialize byte-identically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1

WITNESS_LIMIT = 400

PASS, FAIL, SKIP = "pass", "fail", "skipped"


@dataclass
class CheckResult:
    name: str
    status: str
    witness: str | None = None
    detail: str | None = None
    elapsed_ms: int | None = None

    @staticmethod
    def from_tuple(item) -> "CheckResult":
        name, ok, witness = item
        if witness is not None and len(witness) > WITNESS_LIMIT:
            witness = witness[:WITNESS_LIMIT] + " ..."
        return CheckResult(name, PASS if ok else FAIL, witness)

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        if self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checks: list = field(default_factory=list)
    elapsed_ms: int | None = None

    @property
    def aggregate(self) -> str:
        statuses = [c.status for c in self.checks]
        if any(s == FAIL for s in statuses):
            return FAIL
        return PASS

    def sort_key(self):
        return (self.suite,
                self.params.get("parity", ""),
                self.params.get("n", 0),
                self.params.get("d", 0))

    def as_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "params": dict(sorted(self.params.items())),
            "checks": [c.as_dict() for c in sorted(self.checks, key=lambda c: c.name)],
            "aggregate": self.aggregate,
        }
        if self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def assemble(config: dict, reports: list) -> dict:
    reports = sorted(reports, key=SuiteReport.sort_key)
    aggregate = FAIL if any(r.aggregate == FAIL for r in reports) else PASS
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": "thetafix",
        "config": dict(sorted(config.items())),
        "suites": [r.as_dict() for r in reports],
        "aggregate": aggregate,
    }


def render_json(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"


def render_text(document: dict) -> str:
    lines = []
    for suite in document["suites"]:
        params = suite["params"]
        ptxt = " ".join(f"{k}={v}" for k, v in params.items())
        lines.append(f"== {suite['suite']} [{ptxt}] :: {suite['aggregate'].upper()}")
        for check in suite["checks"]:
            mark = {"pass": "ok", "fail": "FAIL", "skipped": "skip"}[check["status"]]
            line = f"   {mark:<5} {check['name']}"
            if check.get("detail"):
                line += f"  ({check['detail']})"
            lines.append(line)
            if check.get("witness"):
                lines.append(f"         witness: {check['witness']}")
    lines.append(f"aggregate: {document['aggregate'].upper()}")
    return "\n".join(lines) + "\n"
