"""Acceptance criteria, each run cold in its own interpreter and timed.

Run directly with --criterion N to print one JSON result; under pytest a
single PASS/FAIL line per criterion is printed.
"""

import json
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent

# criterion -> (title, seconds allowed)
CRITERIA = {
    1: ("lattice structure and endomorphisms", 1),
    2: ("surface models", 5),
    3: ("intersection tables", 10),
    4: ("Hom lattices", 10),
    5: ("monodromy matrices", 5),
    6: ("presentation sanity", 1),
    7: ("index chain", 60),
    8: ("deterministic full run", 120),
}

CRITERION_ONE = (
    "Eo.group_order",
    "Eo.X_squared_is_5",
    "Eo.X_commutes_with_group",
    "Eo.commutant_rank",
    "Eo.automorphisms_are_plus_minus_id",
    "Eo.orbit_of_e_size",
    "Eo.orbit_of_e_closed_under_negation",
)


def _summarise(checks):
    failed = [c for c in checks if not c.passed]
    detail = "; ".join(f"{c.name}: expected {c.expected}, got {c.actual}" for c in failed)
    return not failed, detail or f"{len(checks)} checks"


def _criterion(n):
    from icosamono import fpgroups, intersections, suites

    if n == 1:
        return _summarise([c for c in suites.rep_a5_checks() if c.name in CRITERION_ONE])
    if n == 2:
        return _summarise(suites.surface_structure_checks())
    if n == 3:
        return _summarise(intersections.table_report())
    if n == 4:
        return _summarise(suites.isotypic_checks())
    if n == 5:
        return _summarise(suites.monodromy_checks())
    if n == 6:
        return _summarise(fpgroups.presentation_report())
    if n == 7:
        checks, _, _ = fpgroups.index_report()
        return _summarise(checks)
    if n == 8:
        with tempfile.TemporaryDirectory() as d:
            texts = []
            for k in range(2):
                path = Path(d) / f"report{k}.txt"
                subprocess.run([sys.executable, "-m", "icosamono", "verify", "--report", str(path)], capture_output=True)
                texts.append(path.read_bytes())
        same = texts[0] == texts[1] and bool(texts[0])
        return same, f"{len(texts[0])} bytes" if same else "reports differ"
    raise ValueError(n)


def run_criterion(n):
    proc = subprocess.run(
        [sys.executable, str(Path(__file__)), "--criterion", str(n)], capture_output=True, text=True, cwd=ROOT
    )
    if proc.returncode:
        return {"ok": False, "detail": proc.stderr.strip().splitlines()[-1:], "seconds": 0.0}
    return json.loads(proc.stdout)


@pytest.fixture(scope="module")
def results():
    return {}


def _report(capsys, n, res):
    title, limit = CRITERIA[n]
    status = "PASS" if res["ok"] and res["seconds"] < limit else "FAIL"
    with capsys.disabled():
        print(f"\ncriterion {n} {status} ({title}) {res['seconds']:.2f}s/{limit}s: {res['detail']}")


@pytest.mark.parametrize(
    "n",
    [pytest.param(1, marks=pytest.mark.xfail(strict=True, reason="2+X is a unit, so Aut is larger than +-Id"))]
    + list(range(2, 9)),
)
def test_criterion(n, capsys):
    res = run_criterion(n)
    _report(capsys, n, res)
    assert res["seconds"] < CRITERIA[n][1]
    assert res["ok"], res["detail"]


def test_criterion_one_other_parts():
    from icosamono import suites

    checks = [c for c in suites.rep_a5_checks() if c.name in CRITERION_ONE]
    assert [c.name for c in checks if not c.passed] == ["Eo.automorphisms_are_plus_minus_id"]
    iso = [c for c in suites.rep_a5_checks() if c.name == "Eo.isometric_automorphisms_are_plus_minus_id"]
    assert iso[0].passed


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser()
    parser.add_argument("--criterion", type=int, required=True, choices=sorted(CRITERIA))
    args = parser.parse_args()
    start = time.perf_counter()
    ok, detail = _criterion(args.criterion)
    print(json.dumps({"ok": ok, "detail": detail, "seconds": time.perf_counter() - start}))
