"""Result containers and renderers for verification runs.

A case is the unit of reporting: one identity family at one outer
parameter, with inner sweeps folded into the case body.  JSON output is
normalised for byte-identical replay (timing is forced to zero there;
the text rendering keeps real elapsed milliseconds).
"""

import json
from dataclasses import dataclass, field
from typing import Any

STATUSES = ("pass", "fail", "error")


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    params: dict[str, Any]
    status: str
    millis: int
    detail: str = ""

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}")


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    cases: tuple[CaseResult, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        ids = [c.case_id for c in self.cases]
        if len(set(ids)) != len(ids):
            raise ValueError("case ids must be unique")

    def summary(self) -> dict[str, int]:
        counts = {"pass": 0, "fail": 0, "error": 0}
        for c in self.cases:
            counts[c.status] += 1
        return counts

    def all_passed(self) -> bool:
        return all(c.status == "pass" for c in self.cases)


def report_to_obj(report: SuiteReport) -> dict[str, Any]:
    """Schema view of a report; millis normalised to 0 for determinism."""
    return {
        "suite": report.suite,
        "cases": [
            {
                "id": c.case_id,
                "params": c.params,
                "status": c.status,
                "millis": 0,
                "detail": c.detail,
            }
            for c in report.cases
        ],
        "summary": report.summary(),
    }


def report_from_obj(obj: dict[str, Any]) -> SuiteReport:
    return SuiteReport(
        suite=obj["suite"],
        cases=tuple(
            CaseResult(
                case_id=c["id"],
                params=c["params"],
                status=c["status"],
                millis=c["millis"],
                detail=c["detail"],
            )
            for c in obj["cases"]
        ),
    )


def render_json(report: SuiteReport) -> str:
    return json.dumps(report_to_obj(report), indent=2) + "\n"


def render_text(report: SuiteReport) -> str:
    lines = [f"suite {report.suite}"]
    width = max((len(c.case_id) for c in report.cases), default=0)
    for c in report.cases:
        lines.append(f"  {c.case_id:<{width}}  {c.status:<5}  {c.millis:>6} ms")
        if c.detail:
            lines.append(f"      {c.detail}")
    s = report.summary()
    lines.append(
        f"{s['pass']} passed, {s['fail']} failed, {s['error']} errored"
    )
    return "\n".join(lines) + "\n"


def emit_report(
    report: SuiteReport, format: str = "text", path: str | None = None
) -> None:
    """Print the text rendering or write the JSON document to path."""
    if format == "text":
        print(render_text(report), end="")
    elif format == "json":
        doc = render_json(report)
        if path is None:
            print(doc, end="")
        else:
            with open(path, "w") as fh:
                fh.write(doc)
    else:
        raise ValueError(f"format must be text or json, got {format!r}")
