"""Structured results for identity checks."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
OUT_OF_DOMAIN = "out-of-domain"


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check: pass, fail, or out-of-domain.

    A fail always carries a 1-based mismatch position or a counterexample
    (rendered in text form), never just a bare flag.
    """

    name: str
    params: dict = field(default_factory=dict)
    status: str = PASS
    mismatch: int | None = None
    counterexample: str | None = None
    elapsed: float = 0.0

    def __post_init__(self):
        if self.status not in (PASS, FAIL, OUT_OF_DOMAIN):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and self.mismatch is None and self.counterexample is None:
            raise ValueError(f"fail report {self.name} needs a mismatch position or counterexample")

    def __bool__(self) -> bool:
        return self.status == PASS


class Falsification(RuntimeError):
    """An identity that must hold did not; carries the evidence."""

    def __init__(self, message: str, report: VerificationReport | None = None):
        super().__init__(message)
        self.report = report


def passed(name: str, params: dict, started: float) -> VerificationReport:
    return VerificationReport(name, params, PASS, elapsed=time.perf_counter() - started)


def failed(
    name: str,
    params: dict,
    started: float,
    mismatch: int | None = None,
    counterexample: str | None = None,
) -> VerificationReport:
    return VerificationReport(
        name, params, FAIL, mismatch=mismatch, counterexample=counterexample,
        elapsed=time.perf_counter() - started,
    )


def out_of_domain(name: str, params: dict, started: float) -> VerificationReport:
    return VerificationReport(name, params, OUT_OF_DOMAIN, elapsed=time.perf_counter() - started)
