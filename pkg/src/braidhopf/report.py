"""Check results and the two report formats emitted by the CLI."""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str                    # "pass" | "fail" | "skipped"
    witness: str | None = None     # present whenever status == "fail"
    value: str | None = None       # optional informational payload
    informational: bool = False    # not counted towards the overall status

    def failed(self) -> bool:
        return self.status == "fail" and not self.informational


def entry_witness(i: int, j: int, lhs, rhs) -> str:
    return f"({i},{j}):lhs={lhs}:rhs={rhs}"


def eq_check(name: str, lhs: Matrix, rhs: Matrix, *, informational: bool = False) -> CheckResult:
    diff = lhs.first_difference(rhs)
    if diff is None:
        return CheckResult(name, "pass", informational=informational)
    i, j = diff
    return CheckResult(name, "fail", witness=entry_witness(i, j, lhs.entry(i, j), rhs.entry(i, j)),
                       informational=informational)


def chain_eq_check(name: str, mats: list[Matrix]) -> CheckResult:
    """All matrices in the chain must agree; witness from the first break."""
    for k in range(len(mats) - 1):
        diff = mats[k].first_difference(mats[k + 1])
        if diff is not None:
            i, j = diff
            return CheckResult(name, "fail",
                               witness=entry_witness(i, j, mats[k].entry(i, j), mats[k + 1].entry(i, j)))
    return CheckResult(name, "pass")


def bool_check(name: str, ok: bool, witness: str = "condition_violated", value: str | None = None) -> CheckResult:
    if ok:
        return CheckResult(name, "pass", value=value)
    return CheckResult(name, "fail", witness=witness, value=value)


def merge_checks(name: str, checks: list[CheckResult]) -> CheckResult:
    """Collapse a sub-report into a single named entry (first failure wins)."""
    for c in checks:
        if c.status == "fail":
            return CheckResult(name, "fail", witness=f"{c.name}:{c.witness}")
    return CheckResult(name, "pass")


@dataclass(frozen=True)
class Report:
    command: str
    checks: tuple[CheckResult, ...]

    @property
    def overall(self) -> str:
        return "fail" if any(c.failed() for c in self.checks) else "pass"

    def render(self, style: str = "plain") -> str:
        if style == "machine":
            lines = [f"command={self.command}"]
            for c in self.checks:
                parts = [f"check={c.name}", f"status={c.status}"]
                if c.informational:
                    parts.append("informational=true")
                if c.value is not None:
                    parts.append(f"value={c.value}")
                if c.witness is not None:
                    parts.append(f"witness={c.witness}")
                lines.append(" ".join(parts))
            lines.append(f"overall={self.overall}")
            return "\n".join(lines)
        width = max((len(c.name) for c in self.checks), default=0)
        lines = [f"# {self.command}"]
        for c in self.checks:
            line = f"{c.name.ljust(width)}  {c.status.upper()}"
            if c.value is not None:
                line += f"  [{c.value}]"
            if c.witness is not None:
                line += f"  witness {c.witness}"
            lines.append(line)
        lines.append(f"overall: {self.overall.upper()}")
        return "\n".join(lines)


def make_report(command: str, checks: list[CheckResult]) -> Report:
    return Report(command, tuple(checks))
