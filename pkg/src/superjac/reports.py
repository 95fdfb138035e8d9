"""Check reports and their canonical JSON serialization."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any, Callable

SCHEMA_VERSION = 1


def render(value: Any) -> str:
    """Exact, canonical text for report fields: integers in decimal, no floats."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {render(v)}" for k, v in sorted(value.items())) + "}"
    if isinstance(value, float):
        raise TypeError("floating point values are not allowed in reports")
    return str(value)


@dataclass
class CheckReport:
    name: str
    params: dict[str, str]
    expected: str
    actual: str
    passed: bool
    runtime_ms: int = 0
    seed: int | None = None
    notes: dict[str, str] = field(default_factory=dict)

    def sort_key(self) -> tuple:
        """Name, then parameters in their given order; integers compare numerically."""
        def value_key(v: str):
            try:
                return (0, int(v), "")
            except ValueError:
                return (1, 0, v)
        return (self.name, [(k, value_key(v)) for k, v in self.params.items()])

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "name": self.name,
            "params": dict(sorted(self.params.items())),
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
            "runtimeMs": self.runtime_ms if timings else 0,
            "seed": None if self.seed is None else str(self.seed),
        }
        if self.notes:
            out["notes"] = dict(sorted(self.notes.items()))
        return out

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{status} {self.name} {params}".rstrip()


def make_report(name: str, params: dict, expected: Any, actual: Any, passed: bool,
                runtime_ms: int = 0, seed: int | None = None, notes: dict | None = None) -> CheckReport:
    return CheckReport(
        name=name,
        params={k: render(v) for k, v in params.items()},
        expected=render(expected),
        actual=render(actual),
        passed=bool(passed),
        runtime_ms=runtime_ms,
        seed=seed,
        notes={k: render(v) for k, v in (notes or {}).items()},
    )


def timed(fn: Callable[..., CheckReport]) -> Callable[..., CheckReport]:
    """Fill in runtime_ms on the report a check function returns."""

    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.runtime_ms = int((time.perf_counter() - start) * 1000)
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    wrapper.__wrapped__ = fn
    return wrapper


def error_report(name: str, params: dict, exc: BaseException, seed: int | None = None) -> CheckReport:
    return make_report(name, params, "no error", f"error: {type(exc).__name__}: {exc}", False, seed=seed)


def report_document(reports: list[CheckReport], timings: bool = False) -> dict:
    ordered = sorted(reports, key=CheckReport.sort_key)
    return {
        "version": SCHEMA_VERSION,
        "checks": [r.to_json(timings) for r in ordered],
        "summary": {"total": len(ordered), "passed": sum(r.passed for r in ordered)},
    }


def dumps(reports: list[CheckReport], timings: bool = False) -> str:
    return json.dumps(report_document(reports, timings), indent=2, sort_keys=False) + "\n"
