"""Command line entry point: run the verification suites or dump the raw tables.

Exit status is 0 when every check passes, 1 when any check fails (or the
report cannot be written), and 2 when coset enumeration overflows its limit.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from . import __version__, fpgroups, surfaces
from .checks import Check
from .suites import SUITE_ORDER, SUITES

EXIT_OK, EXIT_FAIL, EXIT_OVERFLOW = 0, 1, 2


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    status: str  # pass, fail or skip
    expected: str
    actual: str
    millis: int  # suite wall time; shown on the console, never written to the report


@dataclass(frozen=True)
class RunConfig:
    modules: tuple[str, ...] = SUITE_ORDER
    coset_limit: int = fpgroups.DEFAULT_COSET_LIMIT
    report_path: Optional[str] = None
    emit_tables: bool = False


@dataclass
class RunOutcome:
    results: list[CheckResult]
    headline: dict[str, str]
    tables: Optional[str]
    overflow: Optional[str]

    @property
    def exit_code(self) -> int:
        if self.overflow:
            return EXIT_OVERFLOW
        return EXIT_FAIL if any(r.status == "fail" for r in self.results) else EXIT_OK


def _single_line(text: str) -> str:
    return " ".join(str(text).split())


def execute(config: RunConfig) -> RunOutcome:
    results: list[CheckResult] = []
    headline = {"index_in_SL2O": "not run", "index_SL2Oo_in_SL2O": "not run", "index_in_SL2Oo": "not run"}
    tables = None
    overflow = None

    def record(suite: str, checks: Sequence[Check], millis: int) -> None:
        for c in checks:
            status = "pass" if c.passed else "fail"
            results.append(CheckResult(suite, c.name, status, _single_line(c.expected), _single_line(c.actual), millis))

    for suite in SUITE_ORDER:
        if suite not in config.modules:
            continue
        start = time.perf_counter()
        if suite == "fp-groups":
            checks = fpgroups.presentation_report()
            try:
                more, table, chain = fpgroups.index_report(config.coset_limit)
            except fpgroups.Overflow as exc:
                overflow = f"coset enumeration stopped: {exc}"
                more, table, chain = [], None, None
            checks = checks + more
            if table is not None:
                headline["index_in_SL2O"] = str(table.index)
                if config.emit_tables:
                    tables = table.dump()
            if chain is not None:
                headline["index_SL2Oo_in_SL2O"] = str(chain.index_oo_in_o)
                headline["index_in_SL2Oo"] = str(chain.index_in_sl2oo)
        else:
            checks = SUITES[suite]()
        record(suite, checks, int((time.perf_counter() - start) * 1000))

    names = [r.name for r in results]
    if len(names) != len(set(names)):
        raise AssertionError("check names must be unique within a run")
    return RunOutcome(results, headline, tables, overflow)


def render_report(outcome: RunOutcome, config: RunConfig) -> str:
    """Plain key=value text with a fixed key order; blank lines separate records."""
    lines = [
        "report=icosamono-verify",
        f"version={__version__}",
        "modules=" + ",".join(m for m in SUITE_ORDER if m in config.modules),
        f"coset_limit={config.coset_limit}",
        "",
    ]
    for r in outcome.results:
        lines += [f"check={r.name}", f"suite={r.suite}", f"status={r.status}", f"expected={r.expected}", f"actual={r.actual}", ""]
    counts = {s: sum(1 for r in outcome.results if r.status == s) for s in ("pass", "fail", "skip")}
    lines += ["[summary]"] + [f"{k}={v}" for k, v in counts.items()]
    lines += [f"{k}={v}" for k, v in outcome.headline.items()]
    lines.append(f"overflow={outcome.overflow or 'none'}")
    lines.append(f"exit={outcome.exit_code}")
    if outcome.tables:
        lines += ["", "[coset_table]", outcome.tables.rstrip("\n")]
    return "\n".join(lines) + "\n"


def _console(outcome: RunOutcome, out) -> None:
    last = None
    for r in outcome.results:
        if r.suite != last:
            print(f"== {r.suite} ({r.millis} ms)", file=out)
            last = r.suite
        line = f"{r.status.upper():4} {r.name}"
        if r.status == "fail":
            line += f"  expected: {r.expected}  actual: {r.actual}"
        print(line, file=out)
    n_fail = sum(1 for r in outcome.results if r.status == "fail")
    print(f"{len(outcome.results) - n_fail} passed, {n_fail} failed", file=out)
    for k, v in outcome.headline.items():
        print(f"{k}: {v}", file=out)
    if outcome.overflow:
        print(outcome.overflow, file=sys.stderr)


def run(config: RunConfig, out=None) -> int:
    out = out or sys.stdout
    outcome = execute(config)
    _console(outcome, out)
    if config.report_path:
        try:
            with open(config.report_path, "w", encoding="utf-8") as fh:
                fh.write(render_report(outcome, config))
        except OSError as exc:
            print(f"cannot write report: {exc}", file=sys.stderr)
            return EXIT_FAIL
    return outcome.exit_code


def _modules(text: str) -> tuple[str, ...]:
    mods = tuple(m.strip() for m in text.split(",") if m.strip())
    unknown = [m for m in mods if m not in SUITE_ORDER]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown module(s): {', '.join(unknown)}")
    return mods


def _limit(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("coset limit must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="icosamono", description="Verify the isotypic monodromy computation.")
    sub = p.add_subparsers(dest="command")
    v = sub.add_parser("verify", help="run the verification suites (default)")
    v.add_argument("--modules", type=_modules, default=SUITE_ORDER, help="comma separated subset of " + ",".join(SUITE_ORDER))
    v.add_argument("--coset-limit", type=_limit, default=fpgroups.DEFAULT_COSET_LIMIT)
    v.add_argument("--report", metavar="PATH", help="write the key=value report here")
    v.add_argument("--emit-tables", action="store_true", help="append the coset table to the report")
    d = sub.add_parser("dump-complex", help="print the cell complex of one surface model")
    d.add_argument("model", choices=("sigma", "pi"))
    c = sub.add_parser("dump-cosets", help="print the coset table of the monodromy group")
    c.add_argument("--coset-limit", type=_limit, default=fpgroups.DEFAULT_COSET_LIMIT)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0].startswith("-") and argv[0] not in ("-h", "--help"):
        argv.insert(0, "verify")
    args = build_parser().parse_args(argv)
    if args.command == "dump-complex":
        sys.stdout.write(surfaces.dump_complex(args.model))
        return EXIT_OK
    if args.command == "dump-cosets":
        try:
            table = fpgroups.todd_coxeter(fpgroups.sl2o_presentation(), fpgroups.MONODROMY_WORDS, args.coset_limit)
        except fpgroups.Overflow as exc:
            print(f"coset enumeration stopped: {exc}", file=sys.stderr)
            return EXIT_OVERFLOW
        sys.stdout.write(table.dump())
        return EXIT_OK
    config = RunConfig(args.modules, args.coset_limit, args.report, args.emit_tables)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
