"""A small record type shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    expected: str
    actual: str

    @staticmethod
    def equal(name: str, expected, actual) -> "Check":
        return Check(name, expected == actual, str(expected), str(actual))

    @staticmethod
    def true(name: str, value: bool, detail: str = "") -> "Check":
        return Check(name, bool(value), "True", detail or str(bool(value)))
