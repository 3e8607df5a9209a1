import json
import os
import subprocess
import sys

from locallab import new_coloring, random_coloring, real_set, save_coloring, save_real_set
from locallab.cli import run


def mono_file(tmp_path, n, name="mono.json"):
    g = new_coloring(n, [(u, v, "m") for u in range(n) for v in range(u + 1, n)])
    path = tmp_path / name
    save_coloring(g, path)
    return path


def test_check_exit_codes(tmp_path):
    mono = mono_file(tmp_path, 6)
    assert run(["check", "--input", str(mono), "--k", "3", "--l", "1"]) == 0
    assert run(["check", "--input", str(mono), "--k", "3", "--l", "2"]) == 1
    rainbow = tmp_path / "rainbow.json"
    save_coloring(random_coloring(5, 10, seed=1), rainbow)
    assert run(["check", "--input", str(rainbow), "--k", "3", "--l", "2",
                "--mode", "sampled", "--trials", "50", "--seed", "3"]) in (0, 1)


def test_check_missing_file_is_usage_error(tmp_path):
    assert run(["check", "--input", str(tmp_path / "nope.json"), "--k", "3", "--l", "1"]) == 2


def test_check_emits_verifiable_certificate(tmp_path, capsys):
    mono = mono_file(tmp_path, 6)
    cert = tmp_path / "verdict.json"
    assert run(["check", "--input", str(mono), "--k", "3", "--l", "2",
                "--cert", str(cert)]) == 1
    out = capsys.readouterr().out
    assert "REFUTED" in out
    assert run(["verify", "--cert", str(cert), "--input", str(mono)]) == 0
    payload = json.loads(cert.read_text())
    payload["holds"] = True
    cert.write_text(json.dumps(payload))
    assert run(["verify", "--cert", str(cert), "--input", str(mono)]) == 1


def test_energy_with_bound_and_bruteforce(tmp_path, capsys):
    mono = mono_file(tmp_path, 5)
    assert run(["energy", "--input", str(mono), "--r", "2",
                "--bruteforce", "--bound"]) == 0
    out = capsys.readouterr().out
    assert "400" in out  # (5*4)^2
    assert "agree" in out


def test_energy_graph_pipeline_and_witness(tmp_path, capsys):
    mono = mono_file(tmp_path, 12)
    graph = tmp_path / "eg.json"
    assert run(["energy-graph", "--input", str(mono), "--stages", "diagonal",
                "--out", str(graph)]) == 0
    assert run(["find", "--graph", str(graph), "--length", "4"]) == 1
    cert = tmp_path / "wit.json"
    assert run(["witness", "--kind", "pair", "--input", str(mono),
                "--graph", str(graph), "--k", "8", "--cert", str(cert)]) == 1
    out = capsys.readouterr().out
    assert "witness" in out.lower()
    assert run(["verify", "--cert", str(cert), "--input", str(mono)]) == 0


def test_energy_graph_preset_empties_small_instances(tmp_path, capsys):
    mono = mono_file(tmp_path, 12)
    graph = tmp_path / "preset.json"
    assert run(["energy-graph", "--input", str(mono), "--preset", "pair-cycle",
                "--k", "8", "--out", str(graph)]) == 0
    assert run(["find", "--graph", str(graph), "--length", "4"]) == 0


def test_find_patterns_in_colorings(tmp_path):
    mono = mono_file(tmp_path, 6)
    assert run(["find", "--input", str(mono), "--color", "m",
                "--bipartite", "2", "3"]) == 1
    assert run(["find", "--input", str(mono), "--color", "m",
                "--subdivision", "3"]) == 1
    assert run(["find", "--input", str(mono), "--color", "nope",
                "--subdivision", "3"]) == 2
    # missing required combination
    assert run(["find", "--input", str(mono)]) == 2


def test_oracle_commands(tmp_path, capsys):
    cert = tmp_path / "f.json"
    assert run(["oracle-f", "--n", "6", "--k", "3", "--l", "2",
                "--cert", str(cert)]) == 0
    out = capsys.readouterr().out
    assert "3" in out
    assert run(["verify", "--cert", str(cert)]) == 0

    cert = tmp_path / "g.json"
    assert run(["oracle-g", "--n", "4", "--k", "4", "--l", "3",
                "--max-value", "6", "--cert", str(cert)]) == 0
    assert run(["verify", "--cert", str(cert)]) == 0


def test_oracle_budget_exit_code(tmp_path, monkeypatch):
    monkeypatch.setenv("LOCALLAB_BUDGET", "10")
    assert run(["oracle-f", "--n", "6", "--k", "3", "--l", "2"]) == 3


def test_behrend_and_diffset(tmp_path, capsys):
    out_file = tmp_path / "b.json"
    assert run(["behrend", "--n", "30", "--out", str(out_file)]) == 0
    payload = json.loads(out_file.read_text())
    assert len(payload["elements"]) == 30

    diff = tmp_path / "d.json"
    assert run(["diffset", "--input", str(out_file), "--out", str(diff)]) == 0
    capsys.readouterr()


def test_sweep_writes_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    assert run(["sweep", "--n", "8", "--c", "2..4", "--k", "4", "--l", "3",
                "--seeds", "3", "--mode", "exhaustive", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "family,n,k,l,c,seeds,trials,violations,rate"
    assert len(lines) == 4
    first = out.read_bytes()
    assert run(["sweep", "--n", "8", "--c", "2..4", "--k", "4", "--l", "3",
                "--seeds", "3", "--mode", "exhaustive", "--out", str(out)]) == 0
    assert out.read_bytes() == first


def test_repeated_runs_are_byte_identical(tmp_path):
    mono = mono_file(tmp_path, 12)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        assert run(["energy-graph", "--input", str(mono), "--stages",
                    "diagonal,rare:3", "--out", str(out)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_console_entry_point_in_fresh_process(tmp_path):
    mono = mono_file(tmp_path, 6)
    env = dict(os.environ)
    proc = subprocess.run(
        [sys.executable, "-m", "locallab", "check", "--input", str(mono),
         "--k", "3", "--l", "2"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 1
    assert "REFUTED" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "locallab", "no-such-command"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 2


def test_arith_witness_pipeline(tmp_path, capsys):
    values = tmp_path / "vals.json"
    save_real_set(real_set([0, 1, 2, 3, 10, 11, 12, 13]), values)
    graph = tmp_path / "arith.json"
    # seed 6 splits the two blocks across the parts, so the plus class
    # carries a 4-cycle
    assert run(["energy-graph", "--values", str(values), "--r", "2",
                "--preset", "sign-split", "--seed", "6", "--out", str(graph)]) == 0
    plus = tmp_path / "arith.p.json"
    minus = tmp_path / "arith.m.json"
    assert plus.exists() and minus.exists()
    assert run(["find", "--graph", str(plus), "--length", "4"]) == 1
    cert = tmp_path / "clique.json"
    assert run(["witness", "--kind", "arith", "--graph", str(plus),
                "--values", str(values), "--k", "2", "--cert", str(cert)]) == 1
    assert run(["verify", "--cert", str(cert), "--values", str(values)]) == 0
    out = capsys.readouterr().out
    assert "12" in out  # repetition count
