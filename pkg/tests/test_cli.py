import subprocess
import sys

import pytest

from icosamono import cli


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "icosamono", *args], capture_output=True, text=True)


def parse_report(text):
    head, _, rest = text.partition("\n\n")
    records = []
    body, _, summary = rest.partition("[summary]\n")
    for block in body.strip().split("\n\n"):
        records.append(dict(line.split("=", 1) for line in block.splitlines()))
    summary_part = summary.split("\n\n")[0]
    return (
        dict(line.split("=", 1) for line in head.splitlines()),
        records,
        dict(line.split("=", 1) for line in summary_part.splitlines()),
    )


@pytest.fixture(scope="module")
def full_report(tmp_path_factory):
    path = tmp_path_factory.mktemp("r") / "report.txt"
    proc = run_cli("verify", "--report", str(path))
    return proc, path.read_text()


def test_full_run_exit_and_headline(full_report):
    proc, text = full_report
    head, records, summary = parse_report(text)
    assert head["report"] == "icosamono-verify"
    assert summary["index_in_SL2O"] == "20"
    assert summary["index_SL2Oo_in_SL2O"] == "10"
    assert summary["index_in_SL2Oo"] == "2"
    failed = [r["check"] for r in records if r["status"] == "fail"]
    # the only failure is the unit 2+X of the endomorphism ring
    assert failed == ["Eo.automorphisms_are_plus_minus_id"]
    assert proc.returncode == 1 and summary["exit"] == "1"
    assert all(set(r) == {"check", "suite", "status", "expected", "actual"} for r in records)


def test_report_is_deterministic(full_report, tmp_path):
    path = tmp_path / "again.txt"
    run_cli("--report", str(path))
    assert path.read_text() == full_report[1]


def test_filter_passing_modules(tmp_path):
    path = tmp_path / "r.txt"
    proc = run_cli("verify", "--modules", "monodromy,isotypic", "--report", str(path))
    assert proc.returncode == 0
    head, records, summary = parse_report(path.read_text())
    assert head["modules"] == "isotypic,monodromy"
    assert {r["suite"] for r in records} == {"isotypic", "monodromy"}
    assert summary["index_in_SL2O"] == "not run"


def test_overflow_exit_code(tmp_path):
    path = tmp_path / "r.txt"
    proc = run_cli("verify", "--modules", "fp-groups", "--coset-limit", "5", "--report", str(path))
    assert proc.returncode == 2
    _, _, summary = parse_report(path.read_text())
    assert summary["overflow"] != "none" and summary["exit"] == "2"


def test_emit_tables(tmp_path):
    path = tmp_path / "r.txt"
    proc = run_cli("verify", "--modules", "fp-groups", "--emit-tables", "--report", str(path))
    assert proc.returncode == 0
    text = path.read_text()
    table = text.split("[coset_table]\n", 1)[1]
    assert table.startswith("# cosets=20 ")


def test_unknown_module_rejected():
    proc = run_cli("verify", "--modules", "bogus")
    assert proc.returncode == 2 and "unknown module" in proc.stderr


def test_dump_subcommands():
    proc = run_cli("dump-complex", "pi")
    assert proc.returncode == 0 and proc.stdout.startswith("# complex")
    proc = run_cli("dump-cosets")
    assert proc.returncode == 0 and proc.stdout.startswith("# cosets=20 ")
    assert run_cli("dump-cosets", "--coset-limit", "5").returncode == 2


def test_unwritable_report(tmp_path):
    code = cli.run(cli.RunConfig(modules=("monodromy",), report_path=str(tmp_path / "no" / "r.txt")), out=open("/dev/null", "w"))
    assert code == 1


def test_exit_code_rules():
    ok = cli.CheckResult("s", "n", "pass", "", "", 0)
    bad = cli.CheckResult("s", "m", "fail", "", "", 0)
    assert cli.RunOutcome([ok], {}, None, None).exit_code == 0
    assert cli.RunOutcome([ok, bad], {}, None, None).exit_code == 1
    assert cli.RunOutcome([bad], {}, None, "stopped").exit_code == 2
