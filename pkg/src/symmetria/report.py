"""Check records and report aggregation/rendering for the batch runner.

A Check is one named verification with an optional residual/tolerance pair;
a CheckReport groups the checks of one suite with pass/fail tallies.  JSON
output is deterministic: sorted keys, full float precision, and no timing
fields (timings appear only in the text rendering, which is not required to
be byte-stable across runs).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    """One verification outcome.

    ``passed`` is authoritative; when both residual and tolerance are
    present they must agree with it (residual <= tolerance iff passed).
    ``status`` may be set to "skipped" for informative, non-asserted checks.
    """

    name: str
    ref: str
    passed: bool
    residual: float | None = None
    tolerance: float | None = None
    samples: int = 1
    detail: str = ""
    status: str = ""
    elapsed_ms: int = 0

    def __post_init__(self):
        if not self.status:
            self.status = "pass" if self.passed else "fail"
        if self.residual is not None and self.tolerance is not None and self.status != "skipped":
            consistent = (self.residual <= self.tolerance) == self.passed
            if not consistent:
                raise ValueError(
                    f"check {self.name!r}: passed={self.passed} inconsistent with "
                    f"residual={self.residual} tolerance={self.tolerance}")

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "paper_ref": self.ref,
            "status": self.status,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "samples": self.samples,
            "detail": self.detail,
        }


@dataclass
class CheckReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if c.status == "fail")

    @property
    def skipped(self) -> int:
        return sum(1 for c in self.checks if c.status == "skipped")

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.name)],
            "summary": {"total": self.total, "passed": self.passed, "failed": self.failed},
        }


def render_json(reports: list[CheckReport], config: dict) -> str:
    doc = {
        "version": "1",
        "config": config,
        "reports": [r.to_json() for r in reports],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _fmt(v: float | None) -> str:
    if v is None:
        return "-"
    return f"{v:.6g}"


def render_text(reports: list[CheckReport], config: dict) -> str:
    lines = []
    lines.append(f"symmetria verification report  (seed={config.get('seed')}, "
                 f"tol={config.get('tol')}, samples={config.get('samples')})")
    total = passed = failed = 0
    for rep in reports:
        lines.append("")
        lines.append(f"[{rep.suite}]")
        for c in sorted(rep.checks, key=lambda c: c.name):
            mark = {"pass": "PASS", "fail": "FAIL", "skipped": "SKIP"}[c.status]
            lines.append(f"  {mark:4s}  {c.name:44s} residual={_fmt(c.residual):>12s}"
                         f"  tol={_fmt(c.tolerance):>9s}  n={c.samples:<4d} [{c.ref}]"
                         + (f"  ({c.elapsed_ms} ms)" if c.elapsed_ms else ""))
        lines.append(f"  -- {rep.passed}/{rep.total} passed, {rep.failed} failed, "
                     f"{rep.skipped} informative")
        total += rep.total
        passed += rep.passed
        failed += rep.failed
    lines.append("")
    lines.append(f"TOTAL: {passed}/{total} passed, {failed} failed")
    return "\n".join(lines) + "\n"
