"""Uniform pass/fail reports with exact residuals.

Every validator and theorem verifier in the engine returns a Report: a list
of named checks, each carrying the residual map (LHS - RHS) when it failed.
Residuals keep hand-entered structure constants debuggable.
"""

from __future__ import annotations

from .errors import StructureError


class CheckItem:
    __slots__ = ("name", "ok", "residual", "note")

    def __init__(self, name, ok, residual=None, note=""):
        self.name = name
        self.ok = ok
        self.residual = residual
        self.note = note

    def residual_summary(self):
        if self.residual is None or self.residual.is_zero:
            return None
        lead = self.residual.leading_entry()
        row, col, val = lead
        return f"entry ({row}, {col}) = {val}; nnz={self.residual.nnz()}"

    def __repr__(self):
        mark = "pass" if self.ok else "FAIL"
        extra = ""
        if not self.ok:
            s = self.residual_summary()
            extra = f" [{s}]" if s else (f" [{self.note}]" if self.note else "")
        return f"[{mark}] {self.name}{extra}"


class Report:
    """Ordered collection of named checks."""

    def __init__(self, title=""):
        self.title = title
        self.items = []

    def add(self, name, ok, residual=None, note=""):
        self.items.append(CheckItem(name, bool(ok), residual, note))
        return self

    def expect_zero(self, name, diff, note=""):
        self.add(name, diff.is_zero, None if diff.is_zero else diff, note)
        return self

    def expect_equal(self, name, lhs, rhs, note=""):
        try:
            diff = lhs - rhs
        except Exception as exc:  # shape mismatch is itself a failure, not a crash
            return self.add(name, False, note=f"shape mismatch: {exc}")
        return self.expect_zero(name, diff, note)

    def expect_match(self, name, lhs, rhs, note=""):
        """Structure-constant equality, ignoring basis labels."""
        from .graded import matrices_match

        return self.add(name, matrices_match(lhs, rhs), note=note)

    def expect(self, name, cond, note=""):
        return self.add(name, cond, note=note)

    def merge(self, sub: "Report", prefix=""):
        for it in sub.items:
            name = f"{prefix}{it.name}" if prefix else it.name
            self.items.append(CheckItem(name, it.ok, it.residual, it.note))
        return self

    @property
    def ok(self):
        return all(it.ok for it in self.items)

    def failures(self):
        return [it for it in self.items if not it.ok]

    def find(self, name):
        for it in self.items:
            if it.name == name:
                return it
        return None

    def raise_if_failed(self, context=""):
        if not self.ok:
            bad = ", ".join(repr(it) for it in self.failures()[:4])
            head = f"{context}: " if context else ""
            raise StructureError(f"{head}{len(self.failures())} check(s) failed: {bad}", self)
        return self

    def __str__(self):
        head = [self.title] if self.title else []
        return "\n".join(head + [repr(it) for it in self.items])

    def __repr__(self):
        n = len(self.items)
        bad = len(self.failures())
        return f"Report({self.title or 'checks'}: {n - bad}/{n} passed)"
