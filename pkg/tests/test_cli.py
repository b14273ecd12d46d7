import json
import os
import subprocess
import sys

from delaygames.backend import BACKEND
from delaygames.cli import main
from delaygames.textformat import load_automaton

from conftest import data_path

COPY = data_path("copy.aut")
PREDICT = data_path("predict.aut")
TOGGLE = data_path("toggle.aut")


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_copy_report(capsys):
    code, out, err = run(capsys, ["solve", COPY])
    assert code == 0
    assert err == ""
    assert out == (
        "winner: O\n"
        "backend: %s\n"
        "index: 2\n"
        "index_bound: 256\n"
        "d_min: 3\n"
        "d_theory: 4096\n"
        "sufficient_lookahead: 6\n"
        "theory_lookahead: 8192\n"
        "reduced_vertices: 5\n"
        "reduced_edges: 7\n" % BACKEND
    )


def test_solve_reruns_identical(capsys):
    _, out1, _ = run(capsys, ["solve", PREDICT])
    _, out2, _ = run(capsys, ["solve", PREDICT])
    assert out1 == out2
    assert out1.startswith("winner: O\n")


def test_solve_toggle_reports_lar(capsys):
    code, out, _ = run(capsys, ["solve", TOGGLE])
    assert "lar_states: 4\n" in out
    assert code in (0, 1)


def test_classes_copy(capsys):
    code, out, err = run(capsys, ["classes", COPY])
    assert code == 0
    assert out == (
        "index: 2\n"
        "index_bound: 256\n"
        "d_min: 3\n"
        "d_theory: 4096\n"
        "infinite_classes: 1\n"
        "class 0: representative 0 infinite no\n"
        "class 1: representative 0,0 infinite yes\n"
    )


def test_synthesize_materialize_simulate_verify(capsys, tmp_path):
    bundle = str(tmp_path / "copy.bundle.json")
    delay = str(tmp_path / "copy.delay.json")

    code, out, _ = run(capsys, ["synthesize", COPY, "--out", bundle])
    assert code == 0
    assert out == (
        "winner: O\nblock_length: 3\nbundle_states: 3\nout: %s\n" % bundle
    )
    assert os.path.exists(bundle)

    code, out, _ = run(capsys, ["materialize", "--strategy", bundle, "--out", delay])
    assert code == 0
    assert out == (
        "kind: delay-transducer\nstates: 127\nlookahead: 6\nout: %s\n" % delay
    )

    code, out, _ = run(
        capsys,
        [
            "simulate",
            "--strategy",
            delay,
            "--adversary",
            "lasso:101:0011",
            "--rounds",
            "12",
        ],
    )
    assert code == 0
    assert out == (
        "adversary: lasso:101:0011\n"
        "rounds: 12\n"
        "lookahead: 6\n"
        "inputs: 1,0,1,0,0,1,1,0,0,1,1,0\n"
        "outputs: 1,0,1,0,0,1,1\n"
    )

    for strategy in (bundle, delay):
        code, out, _ = run(capsys, ["verify", "--strategy", strategy, "--samples", "25"])
        assert code == 0
        assert "samples: 25\n" in out
        assert "failures: 0\n" in out


def test_synthesize_short_block_rejected(capsys, tmp_path):
    out_path = str(tmp_path / "x.json")
    code, out, err = run(
        capsys, ["synthesize", COPY, "--out", out_path, "--block-length", "1"]
    )
    assert code == 2
    assert out == ""
    assert err == "error: block length 1 is below the sufficient length 3\n"
    assert not os.path.exists(out_path)


def test_malformed_automaton_exit_3(capsys, tmp_path):
    bad = tmp_path / "bad.aut"
    text = open(COPY).read().replace("trans s 1/1 s\n", "")
    bad.write_text(text)
    code, out, err = run(capsys, ["solve", str(bad)])
    assert code == 3
    assert err.startswith("error: ")
    assert "s" in err and "1/1" in err


def test_convert_toggle(capsys, tmp_path):
    out_path = str(tmp_path / "toggle.parity.aut")
    code, out, _ = run(capsys, ["convert", TOGGLE, "--out", out_path])
    assert code == 0
    assert out == "kind: parity\nlar_states: 4\nout: %s\n" % out_path
    converted = load_automaton(out_path)
    assert converted.kind == "parity"
    assert len(converted.states) == 4

    code, _, err = run(capsys, ["convert", COPY, "--out", out_path])
    assert code == 2
    assert "already parity" in err


def test_oracle_exit_codes(capsys):
    code, out, _ = run(capsys, ["oracle", COPY, "--lookahead", "1"])
    assert code == 0
    assert out == "winner: O\nlookahead: 1\n"

    code, out, _ = run(capsys, ["oracle", PREDICT, "--lookahead", "1"])
    assert code == 1
    assert out == "winner: I\nlookahead: 1\n"

    code, _, err = run(capsys, ["oracle", COPY, "--lookahead", "12", "--budget", "1000"])
    assert code == 4
    assert err.startswith("error: ")


def test_verify_flags_corrupted_bundle(capsys, tmp_path):
    bundle = str(tmp_path / "copy.bundle.json")
    delay = str(tmp_path / "copy.delay.json")
    broken = str(tmp_path / "broken.delay.json")
    run(capsys, ["synthesize", COPY, "--out", bundle])
    run(capsys, ["materialize", "--strategy", bundle, "--out", delay])
    doc = json.load(open(delay))
    doc["transducer"]["lam"] = [
        None if v is None else {"0": "1", "1": "0"}[v]
        for v in doc["transducer"]["lam"]
    ]
    with open(broken, "w") as fh:
        json.dump(doc, fh)
    code, out, _ = run(capsys, ["verify", "--strategy", broken, "--samples", "10"])
    assert code == 1
    assert "failures: 10\n" in out
    assert "counterexample_prefix: " in out
    assert "counterexample_period: " in out


def test_verify_explicit_adversary(capsys, tmp_path):
    bundle = str(tmp_path / "copy.bundle.json")
    run(capsys, ["synthesize", COPY, "--out", bundle])
    code, out, _ = run(
        capsys, ["verify", "--strategy", bundle, "--adversary", "lasso:1:10"]
    )
    assert code == 0
    assert out.startswith("samples: 1\naccepted: 1\n")

    code, _, err = run(
        capsys, ["verify", "--strategy", bundle, "--adversary", "bogus"]
    )
    assert code == 2
    assert "adversary must be" in err


def test_search_copy_three_states_exhausts(capsys):
    code, out, _ = run(capsys, ["search", COPY, "--states", "3", "--lookahead", "2"])
    assert code == 1
    assert out == "found: no\ncandidates: 5832\n"


def test_search_finds_trivial_winner(capsys, tmp_path):
    aut = tmp_path / "any.aut"
    aut.write_text(
        "automaton parity\n"
        "input 0 1\n"
        "output 0 1\n"
        "states u\n"
        "initial u\n"
        "color u 0\n"
        "trans u 0/0 u\n"
        "trans u 0/1 u\n"
        "trans u 1/0 u\n"
        "trans u 1/1 u\n"
    )
    out_path = str(tmp_path / "found.json")
    code, out, _ = run(
        capsys,
        ["search", str(aut), "--states", "1", "--lookahead", "1", "--out", out_path],
    )
    assert code == 0
    assert out == (
        "found: yes\ncandidates: 1\nstates: 1\nlookahead: 1\nout: %s\n" % out_path
    )
    assert os.path.exists(out_path)


def test_solver_env_selects_python_backend():
    env = dict(os.environ, DELAYGAMES_SOLVER="python")
    proc = subprocess.run(
        [sys.executable, "-m", "delaygames", "solve", COPY],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert "backend: python\n" in proc.stdout
