import subprocess
import sys

import pytest

from inc2ecb.cli import OracleMismatch, StreamError, bench, main, random_sequence, run_stream


def test_three_cycle_witness():
    out = run_stream("graph 3\ninsert 1 2\ninsert 2 3\ninsert 3 1\nquery2ec 1 2\n", oracle_check=True)
    assert out == "2ec 1 2 false witness 1 2\n"


def test_blocks_output():
    text = "graph 3\ninsert 1 2\ninsert 2 1\ninsert 2 3\ninsert 3 2\ninsert 1 3\ninsert 3 1\nblocks\n"
    assert run_stream(text, oracle_check=True) == "blocks 1\nblock 1 2 3\n"


def test_noop_and_comments():
    out = run_stream("# header\ngraph 3\ninsert 1 1  # loop\ninsert 1 2\ninsert 1 2\n")
    assert out == "noop 1 1\nnoop 1 2\n"


def test_nsc_and_bridges():
    out = run_stream("graph 3\ninsert 1 2\ninsert 2 3\ninsert 3 2\nquery2ec 1 2\nbridges\n", oracle_check=True)
    assert out == "2ec 1 2 false nsc\nbridge 2 3\nbridge 3 2\n"


def test_dump_dom():
    out = run_stream("graph 2\ninsert 1 2\ninsert 2 1\ndump-dom\n")
    assert out.splitlines() == ["dom fwd 1 2", "1 - 0 1 0", "2 1 1 2 1",
                                "dom rev 1 2", "1 - 0 1 0", "2 1 1 2 1"]


def test_metrics_lines():
    out = run_stream("graph 2\ninsert 1 2\ninsert 2 1\n", metrics=True)
    assert "# metric insertions 2" in out.splitlines()


@pytest.mark.parametrize("text, line", [
    ("insert 1 2\n", 1),
    ("graph 3\ninsert 1 4\n", 2),
    ("graph 3\nfrobnicate\n", 2),
    ("graph 3\ninsert 1\n", 2),
    ("graph 3\ngraph 4\n", 2),
    ("graph 300\n", 1),
])
def test_errors_carry_line_numbers(text, line):
    with pytest.raises(StreamError) as info:
        run_stream(text, oracle_check=True)
    assert info.value.line == line


def test_exit_codes(tmp_path, capsys):
    good = tmp_path / "ok.txt"
    good.write_text("graph 2\ninsert 1 2\nquery2ec 1 2\n")
    out = tmp_path / "out.txt"
    assert main(["run", str(good), str(out)]) == 0
    assert out.read_text() == "2ec 1 2 false nsc\n"
    bad = tmp_path / "bad.txt"
    bad.write_text("graph 2\ninsert 1 5\n")
    assert main([str(bad)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_oracle_mismatch_exit_code(monkeypatch, tmp_path, capsys):
    import inc2ecb.cli as cli
    monkeypatch.setattr(cli, "blocks_snapshot", lambda index: [[v] for v in range(1, index.n + 1)])
    text = "graph 3\n" + "".join(f"insert {a} {b}\n" for a in (1, 2, 3) for b in (1, 2, 3) if a != b)
    text += "blocks\n"
    with pytest.raises(OracleMismatch):
        run_stream(text, oracle_check=True)
    f = tmp_path / "s.txt"
    f.write_text(text)
    assert main([str(f), "--oracle-check"]) == 2
    assert "oracle mismatch at line 8" in capsys.readouterr().err
    assert main([str(f)]) == 0


def test_deterministic_across_processes():
    seq = random_sequence(12, 60, 3)
    text = "graph 12\n" + "".join(f"insert {u} {v}\nquery2ec {u} {v}\n" for u, v in seq) + "blocks\nbridges\n"
    runs = {subprocess.run([sys.executable, "-m", "inc2ecb", "--oracle-check"], input=text,
                           capture_output=True, text=True, check=True).stdout for _ in range(2)}
    assert len(runs) == 1


@pytest.mark.parametrize("engine", ["oneway", "twoway"])
def test_bench_small(engine):
    rep = bench(50, 500, seed=7, engine=engine)
    assert rep["partitions_equal"] and rep["m"] == 500
    rep = bench(2, 1, seed=3, engine=engine)
    assert rep["m"] == 1 and rep["partitions_equal"]


def test_random_sequence_caps_and_dedups():
    seq = random_sequence(3, 100, 1)
    assert len(seq) == 6 and len(set(seq)) == 6
    assert random_sequence(40, 50, 9) == random_sequence(40, 50, 9)
