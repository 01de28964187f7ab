"""The VerificationRecord: one check outcome, the unit of every report."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of a single check.

    ``passed`` is true iff lhs equals rhs (both rendered as decimal or
    num/den strings).  Skipped records carry no lhs/rhs and explain
    themselves in ``reason``.  ``extra`` holds check-specific key/value
    pairs (sample counts, seeds, ...) in a fixed order.
    """

    check: str
    p: int | None = None
    k: int | None = None
    s: int | None = None
    index: str | None = None
    lhs: str | None = None
    rhs: str | None = None
    passed: bool = False
    skipped: bool = False
    reason: str | None = None
    extra: tuple[tuple[str, object], ...] = ()

    def to_json_dict(self) -> dict:
        """Serializable dict with a stable key order."""
        out: dict = {"check": self.check}
        if self.k is not None:
            out["k"] = self.k
        if self.s is not None:
            out["s"] = self.s
        if self.index is not None:
            out["index"] = self.index
        if self.p is not None:
            out["p"] = self.p
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.rhs is not None:
            out["rhs"] = self.rhs
        out["pass"] = self.passed
        out["skipped"] = self.skipped
        if self.reason is not None:
            out["reason"] = self.reason
        for key, value in self.extra:
            out[key] = value
        return out


def skipped_record(check: str, reason: str, *, p=None, k=None, s=None, index=None,
                   extra=()) -> VerificationRecord:
    return VerificationRecord(
        check=check, p=p, k=k, s=s, index=index,
        passed=True, skipped=True, reason=reason, extra=tuple(extra),
    )


def comparison_record(check: str, lhs: str, rhs: str, *, p=None, k=None, s=None,
                      index=None, reason=None, extra=()) -> VerificationRecord:
    return VerificationRecord(
        check=check, p=p, k=k, s=s, index=index,
        lhs=lhs, rhs=rhs, passed=(lhs == rhs), skipped=False,
        reason=reason, extra=tuple(extra),
    )
