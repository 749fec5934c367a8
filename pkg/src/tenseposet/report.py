"""Tiny pass/fail report used by the law checkers and verify suites."""

from __future__ import annotations


class Report:
    """An ordered list of named checks with optional failure details."""

    def __init__(self, name: str):
        self.name = name
        self.entries = []  # (label, ok, detail)

    def add(self, label: str, ok: bool, detail: str = ""):
        self.entries.append((label, bool(ok), detail))
        return ok

    def require(self, label: str, ok: bool, detail: str = ""):
        """Record only failures; keeps bulk suites compact."""
        if not ok:
            self.entries.append((label, False, detail))
        return ok

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.entries)

    @property
    def failures(self):
        return [(label, detail) for label, ok, detail in self.entries if not ok]

    def first_failure(self):
        for label, ok, detail in self.entries:
            if not ok:
                return label, detail
        return None

    def text(self) -> str:
        lines = [f"report {self.name}"]
        for label, ok, detail in self.entries:
            mark = "ok  " if ok else "FAIL"
            lines.append(f"  {mark} {label}" + (f": {detail}" if detail else ""))
        lines.append(f"result {'PASS' if self.ok else 'FAIL'}")
        return "\n".join(lines)

    def __repr__(self):
        return f"Report({self.name!r}, ok={self.ok})"
