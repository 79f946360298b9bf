import json
import subprocess
import sys

import pytest

from binomprime.cli import main
from binomprime.report import from_json_line, parse_csv


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_isprime_prime(capsys):
    status, out, _ = run(capsys, "isprime", "7")
    rec = from_json_line(out)
    assert status == 0 and rec.extra["verdict"] == "prime" and rec.extra["verified_n_max"] == 28


def test_isprime_composite(capsys):
    status, out, _ = run(capsys, "isprime", "12")
    rec = from_json_line(out)
    assert status == 3
    assert rec.extra["witness_n"] == 14
    assert rec.extra["binom_residue_mod_qx"] == 3 and rec.extra["floor_residue_mod_qx"] == 1
    assert rec.modulus == 12 and (rec.lhs_residue, rec.rhs_residue) == (7, 1)


@pytest.mark.parametrize("argv,msg", [(["isprime", "1"], "p > 1 required"), (["isprime", "x7"], "decimal")])
def test_isprime_errors(capsys, argv, msg):
    status, out, err = run(capsys, *argv)
    assert status == 1 and out == "" and msg in err


def test_isprime_refuses_over_cap(capsys):
    status, _, err = run(capsys, "isprime", "1000003")
    assert status == 1 and "cap" in err
    status, out, _ = run(capsys, "isprime", "1000003", "--verify-n-max", "50")
    assert status == 0 and from_json_line(out).extra["verified_n_max"] == 50


def test_check_examples(capsys):
    assert run(capsys, "check", "thm21", "--n", "10", "--p", "7")[0] == 0
    assert run(capsys, "check", "thm21", "--n", "6", "--p", "4")[0] == 3
    status, out, _ = run(capsys, "check", "bailey-np-rp", "--n", "2", "--r", "1", "--p", "5")
    assert status == 0 and from_json_line(out).modulus == 125
    status, _, err = run(capsys, "check", "bailey-np-rp", "--n", "2", "--r", "1", "--p", "3")
    assert status == 1 and "p >= 5" in err
    assert run(capsys, "check", "mestrovic", "--d", "2", "--q", "3")[0] == 3
    assert run(capsys, "check", "mestrovic", "--d", "2", "--q", "2", "--bound", "20")[0] == 0
    assert run(capsys, "check", "bailey-digits", "--N", "1", "--R", "1", "--n", "2", "--r", "1", "--p", "5")[0] == 0
    assert run(capsys, "check", "apostol", "--n", "27", "--p", "3", "--alpha", "2")[0] == 0
    assert run(capsys, "check", "lucas-corollary", "--n", "3", "--m", "2", "--p", "5")[0] == 0


def test_check_usage_errors(capsys):
    assert run(capsys, "check", "thm21", "--n", "10")[0] == 1
    assert run(capsys, "check", "thm21", "--n", "10", "--p", "7", "--r", "2")[0] == 1
    assert run(capsys, "check", "nope", "--p", "7")[0] == 1
    assert run(capsys, "check", "apostol", "--n", "27", "--p", "3", "--alpha", "0")[0] == 1
    assert run(capsys, "check", "thm21", "--n", "10", "--p", "7", "--max-p", "5")[0] == 1


def test_binom_mod_and_witness_and_explore(capsys):
    status, out, _ = run(capsys, "binom-mod", "13", "7", "5")
    assert status == 0 and from_json_line(out).lhs_residue == 1
    assert run(capsys, "binom-mod", "13", "7", "6")[0] == 1
    status, out, _ = run(capsys, "witness", "9")
    assert status == 3 and from_json_line(out).extra["witness_n"] == 12
    assert run(capsys, "witness", "7")[0] == 1
    status, out, _ = run(capsys, "explore-powers", "5", "1", "--bound", "6")
    assert status == 0 and from_json_line(out).extra["max_l"] == 3


def test_sweep_thm21_primes(capsys):
    status, out, err = run(capsys, "sweep", "--theorem", "thm21", "--p", "2:13", "--primes-only", "--n", "0:200")
    records = [from_json_line(line) for line in out.splitlines()]
    assert status == 0 and len(records) == 6 * 201 and all(r.holds for r in records)
    summary = json.loads(err)["summary"]
    assert summary["checked"] == 1206 and summary["failed"] == 0


def test_sweep_composite_failures_are_expected(capsys):
    status, out, err = run(capsys, "sweep", "--theorem", "thm21", "--p", "2:13", "--n", "0:40")
    summary = json.loads(err)["summary"]
    assert status == 0 and summary["failed"] > 0 and summary["unexpected_failures"] == 0


def test_sweep_oracle_engine_matches_direct(capsys):
    args = ["sweep", "--theorem", "thm21", "--p", "2:20", "--n", "0:120"]
    _, direct, _ = run(capsys, *args)
    _, oracle, _ = run(capsys, *args, "--engine", "oracle")
    assert direct == oracle


def test_sweep_bailey(capsys):
    status, out, _ = run(capsys, "sweep", "--theorem", "bailey-np-rp", "--p", "5,7", "--n", "0:10", "--r", "0:10")
    assert status == 0 and len(out.splitlines()) == 2 * 11 * 11
    status, _, err = run(capsys, "sweep", "--theorem", "bailey-np-rp", "--p", "3:7", "--n", "0:2", "--r", "0:2")
    assert status == 1 and "p >= 5" in err


def test_sweep_mestrovic_csv(capsys):
    status, out, _ = run(capsys, "sweep", "--theorem", "mestrovic", "--d", "2:6", "--q", "2:6", "--format", "csv")
    records = parse_csv(out)
    assert status == 0 and len(records) == 25
    no_ce = {(r.params["d"], r.params["q"]) for r in records if r.holds}
    assert no_ce == {(2, 2), (2, 4), (4, 2), (4, 4), (3, 3), (5, 5)}


def test_sweep_output_file_and_unwritable(capsys, tmp_path):
    target = tmp_path / "out.jsonl"
    status, out, _ = run(capsys, "sweep", "--theorem", "apostol", "--p", "3", "--alpha", "1:2", "--n", "0:30",
                         "--output", str(target))
    assert status == 0 and out == "" and len(target.read_text().splitlines()) == 62
    status, _, err = run(capsys, "sweep", "--theorem", "apostol", "--p", "3", "--alpha", "1", "--n", "0:3",
                         "--output", str(tmp_path / "missing" / "x.csv"))
    assert status == 1 and "cannot write" in err


def test_sweep_config_file_and_override(capsys, tmp_path):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text("# thm21 grid\ntheorem = thm21\np = 5,7\nn: 0:10\nformat = csv\n")
    status, out, _ = run(capsys, "sweep", "--config", str(cfg))
    assert status == 0 and out.startswith("theorem_id,p,n,") and len(out.splitlines()) == 23
    status, out, _ = run(capsys, "sweep", "--config", str(cfg), "--format", "json-lines", "--p", "11")
    assert len(out.splitlines()) == 11 and from_json_line(out.splitlines()[0]).params["p"] == 11
    cfg.write_text("theorem = thm21\nbogus = 1\n")
    assert run(capsys, "sweep", "--config", str(cfg))[0] == 1


def test_format_env_variable(capsys, monkeypatch):
    monkeypatch.setenv("BINOMPRIME_FORMAT", "csv")
    _, out, _ = run(capsys, "check", "thm21", "--n", "10", "--p", "7")
    assert out.startswith("theorem_id,p,n,")
    _, out, _ = run(capsys, "check", "thm21", "--n", "10", "--p", "7", "--format", "json-lines")
    assert out.startswith("{")


def test_sweep_caps_refuse(capsys):
    status, _, err = run(capsys, "sweep", "--theorem", "thm21", "--p", "2:100", "--n", "0:100", "--max-instances", "50")
    assert status == 1 and "cap" in err
    status, _, err = run(capsys, "sweep", "--theorem", "thm21", "--p", "7", "--n", "0:30", "--engine", "oracle",
                         "--max-rows", "10")
    assert status == 1 and "cap" in err


def test_sweep_workers_identical(capsys):
    args = ["sweep", "--theorem", "bailey-digits", "--p", "5,7", "--N", "0:3", "--R", "0:3", "--n", "0:6", "--r", "0:6"]
    one = run(capsys, *args)[1]
    four = run(capsys, *args, "--workers", "4")[1]
    assert one == four and one


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "binomprime", "isprime", "9"], capture_output=True, text=True)
    assert proc.returncode == 3 and '"witness_n":"12"' in proc.stdout
