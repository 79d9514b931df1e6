"""Verdicts, witnesses and condition reports."""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, fields, replace

import numpy as np

from .linalg import Field, FinSpace, Vec


@dataclass(kw_only=True, frozen=True)
class Witness:
    """A failing basis tuple and the two evaluated sides."""

    indices: tuple[int, ...]
    labels: tuple[str, ...]
    lhs: Vec | None = None
    rhs: Vec | None = None
    note: str | None = None

    def render(self) -> str:
        parts = [", ".join(self.labels)]
        if self.lhs is not None and self.rhs is not None:
            parts.append(f"lhs={self.lhs.format_coords()} rhs={self.rhs.format_coords()}")
        if self.note:
            parts.append(self.note)
        return "; ".join(parts)

    def machine(self) -> str:
        return ",".join(str(i) for i in self.indices)


@dataclass(kw_only=True, frozen=True)
class Verdict:
    """The outcome of one condition; ``passed is None`` means not checked."""

    condition: str
    passed: bool | None
    witness: Witness | None = None
    checked: int = 0
    failures: int = 0
    note: str | None = None

    @property
    def status(self) -> str:
        if self.passed is None:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"

    def replace(self, **kwargs) -> "Verdict":
        """Returns a new Verdict with the given fields replaced."""
        return replace(self, **kwargs)

    def same_outcome(self, other: "Verdict") -> bool:
        return all(
            getattr(self, f.name) == getattr(other, f.name)
            for f in fields(self)
            if f.name not in ("note",)
        )


@dataclass(frozen=True)
class ConditionReport:
    """An ordered collection of verdicts, at most one per condition id."""

    verdicts: tuple[Verdict, ...] = ()

    def __post_init__(self):
        seen = set()
        for v in self.verdicts:
            if v.condition in seen:
                raise ValueError(f"Duplicate verdict for condition {v.condition!r}")
            seen.add(v.condition)

    def __add__(self, other: "ConditionReport") -> "ConditionReport":
        merged = list(self.verdicts)
        mine = {v.condition: v for v in self.verdicts}
        for v in other.verdicts:
            existing = mine.get(v.condition)
            if existing is None:
                merged.append(v)
            elif not existing.same_outcome(v):
                raise ValueError(f"Cannot combine conflicting verdicts for {v.condition!r}")
        return ConditionReport(tuple(merged))

    def __iter__(self) -> Iterator[Verdict]:
        return iter(self.verdicts)

    def __len__(self) -> int:
        return len(self.verdicts)

    def __contains__(self, condition: str) -> bool:
        return self.get(condition) is not None

    def __getitem__(self, condition: str) -> Verdict:
        verdict = self.get(condition)
        if verdict is None:
            raise KeyError(condition)
        return verdict

    def get(self, condition: str) -> Verdict | None:
        for v in self.verdicts:
            if v.condition == condition:
                return v
        return None

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(v.condition for v in self.verdicts)

    def passed(self, *conditions: str) -> bool:
        """Whether every named condition was checked and passed."""
        return all(
            (v := self.get(c)) is not None and v.passed is True for c in conditions
        )

    def failed(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.passed is False]

    def all_passed(self, ignore: Iterable[str] = ()) -> bool:
        skip = set(ignore)
        return not any(v.condition not in skip for v in self.failed())

    def first_failure(self, conditions: Sequence[str] | None = None) -> Verdict | None:
        for v in self.failed():
            if conditions is None or v.condition in conditions:
                return v
        return None

    def only(self, *conditions: str) -> "ConditionReport":
        return ConditionReport(tuple(v for v in self.verdicts if v.condition in conditions))

    def outcomes(self) -> dict[str, bool | None]:
        return {v.condition: v.passed for v in self.verdicts}

    @classmethod
    def single(cls, verdict: Verdict) -> "ConditionReport":
        return cls((verdict,))

    @classmethod
    def error(cls, condition: str, message: str) -> "ConditionReport":
        return cls.single(Verdict(condition=condition, passed=False, note=message))


@dataclass
class Tally:
    """Accumulates comparisons for one condition and keeps the first witness."""

    condition: str
    space: FinSpace
    field: Field
    checked: int = 0
    failures: int = 0
    witness: Witness | None = None

    def compare(
        self,
        lhs: np.ndarray,
        rhs: np.ndarray,
        indices: Sequence[int],
        labels: Sequence[str],
        note: str | None = None,
    ) -> bool:
        self.checked += 1
        if np.array_equal(lhs, rhs):
            return True
        self.failures += 1
        if self.witness is None:
            self.witness = Witness(
                indices=tuple(int(i) for i in indices),
                labels=tuple(labels),
                lhs=Vec(self.space, lhs, self.field),
                rhs=Vec(self.space, rhs, self.field),
                note=note,
            )
        return False

    def verdict(self, note: str | None = None) -> Verdict:
        return Verdict(
            condition=self.condition,
            passed=self.failures == 0,
            witness=self.witness,
            checked=self.checked,
            failures=self.failures,
            note=note,
        )


def tally_report(*tallies: Tally) -> ConditionReport:
    return ConditionReport(tuple(t.verdict() for t in tallies))


def summary_verdict(
    condition: str, report: ConditionReport, conditions: Sequence[str]
) -> Verdict:
    """Collapse several verdicts into one that fails on the first failing id."""
    missing = [c for c in conditions if c not in report]
    failing = [c for c in conditions if c in report and report[c].passed is False]
    if failing:
        first = report[failing[0]]
        return Verdict(
            condition=condition,
            passed=False,
            witness=first.witness,
            failures=len(failing),
            checked=len(conditions) - len(missing),
            note="failing: " + ", ".join(failing),
        )
    if missing:
        return Verdict(
            condition=condition, passed=None, note="not checked: " + ", ".join(missing)
        )
    return Verdict(condition=condition, passed=True, checked=len(conditions))


@dataclass(kw_only=True, frozen=True)
class ReportDocument:
    """A report as printed by the command line, in text or machine form."""

    version: str
    digest: str
    report: ConditionReport
    title: str | None = None
    ignore: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.report.all_passed(ignore=self.ignore)

    @property
    def summary(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def render_text(self) -> str:
        lines = [f"weak-crossed {self.version}", f"instance sha256:{self.digest}"]
        if self.title:
            lines.append(self.title)
        width = max((len(v.condition) for v in self.report), default=0) + 2
        for v in self.report:
            line = f"  {f'({v.condition})':<{width}} {v.status}"
            if v.checked:
                line += f"  {v.checked - v.failures}/{v.checked}"
            if v.note:
                line += f"  {v.note}"
            lines.append(line)
            if v.passed is False and v.witness is not None:
                lines.append(f"      witness: {v.witness.render()}")
        lines.append(f"SUMMARY {self.summary}")
        return "\n".join(lines) + "\n"

    def render_machine(self) -> str:
        lines = [f"VERSION {self.version}", f"DIGEST {self.digest}"]
        for v in self.report:
            line = f"COND {v.condition} {v.status}"
            if v.passed is False and v.witness is not None and v.witness.indices:
                line += f" witness={v.witness.machine()}"
            lines.append(line)
        lines.append(f"SUMMARY {self.summary}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.render_machine() if fmt == "machine" else self.render_text()
