import io
import subprocess
import sys

import pytest

from ramp_fim.cli import (
    MineConfig,
    OutputBuffer,
    main,
    render_itemset_line,
    write_itemsets_buffered,
)
from ramp_fim.dataset import parse_transactions
from ramp_fim.oracle import direct_support


class CountingStream(io.StringIO):
    def __init__(self):
        super().__init__()
        self.calls = 0

    def write(self, s):
        self.calls += 1
        return super().write(s)


def run(argv, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin_text), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def sample_file(tmp_path, sample_db):
    p = tmp_path / "sample.dat"
    p.write_text(sample_db.to_fimi())
    return str(p)


@pytest.mark.parametrize(
    "items, support, line",
    [([0, 1], 4, "0 1 (4)\n"), ([5], 2, "5 (2)\n"), ([10, 200, 3000], 1, "10 200 3000 (1)\n")],
)
def test_render_itemset_line(items, support, line):
    assert render_itemset_line(items, support) == line


@pytest.mark.parametrize("threshold, n_lines, writes", [(2, 3, 2), (1, 3, 3), (4096, 0, 0), (3, 3, 1)])
def test_output_buffer_batches(threshold, n_lines, writes):
    stream = CountingStream()
    buf = OutputBuffer(stream, threshold)
    lines = [render_itemset_line([i], 1) for i in range(n_lines)]
    for line in lines:
        write_itemsets_buffered(buf, line)
    buf.close()
    assert buf.writes == stream.calls == writes
    assert stream.getvalue() == "".join(lines)


def test_output_buffer_rejects_zero():
    with pytest.raises(ValueError):
        OutputBuffer(io.StringIO(), 0)


@pytest.mark.parametrize("mode, lines", [("all", 13), ("max", 4), ("closed", 8)])
def test_mine_sample(sample_file, mode, lines):
    code, out, err = run(["mine", "--mode", mode, "--min-sup", "2", "--input", sample_file, "--sorted"])
    assert code == 0
    assert len(out.splitlines()) == lines
    assert err.startswith(f"{lines} itemsets")


def test_mine_reads_stdin_and_matches_oracle(sample_db):
    for mode in ("all", "max", "closed"):
        a = run(["mine", "--mode", mode, "--min-sup", "2", "--sorted"], sample_db.to_fimi())
        b = run(["oracle", "--mode", mode, "--min-sup", "2", "--sorted"], sample_db.to_fimi())
        assert a[0] == b[0] == 0 and a[1] == b[1]


def test_output_file(sample_file, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run(["mine", "--min-sup", "2", "--input", sample_file, "--output", str(target), "--sorted"])
    assert code == 0 and out == ""
    assert target.read_text().splitlines()[0] == "0 (5)"


def test_fraction_min_sup(sample_file):
    # ceil(0.25 * 7) = 2
    frac = run(["mine", "--min-sup", "0.25", "--input", sample_file, "--sorted"])
    absolute = run(["mine", "--min-sup", "2", "--input", sample_file, "--sorted"])
    assert frac[1] == absolute[1]


def test_buffer_sizes_are_transparent(sample_file):
    outs = {run(["mine", "--min-sup", "2", "--input", sample_file, "--buffer", str(b)])[1] for b in (1, 2, 5, 4096)}
    assert len(outs) == 1


def test_round_trip_supports(sample_file, sample_db):
    _, out, _ = run(["mine", "--mode", "closed", "--min-sup", "2", "--input", sample_file])
    for line in out.splitlines():
        items, sup = line.rsplit(" (", 1)
        assert direct_support(sample_db, map(int, items.split())) == int(sup.rstrip(")"))


@pytest.mark.parametrize(
    "argv, code",
    [
        (["mine", "--min-sup", "2", "--input", "/nonexistent/file.dat"], 3),
        (["mine", "--min-sup", "2", "--no-pep"], 4),
        (["mine", "--min-sup", "0"], 4),
        (["mine", "--min-sup", "1.5"], 4),
        (["mine", "--min-sup", "abc"], 4),
        (["mine", "--min-sup", "2", "--buffer", "0"], 4),
        (["mine", "--mode", "sideways", "--min-sup", "2"], 4),
        (["gen", "--transactions", "10", "--items", "3", "--avg-len", "5", "--patterns", "2"], 4),
    ],
)
def test_exit_codes(argv, code):
    # argparse-level errors leave through SystemExit, the rest return the code
    try:
        got = run(argv)[0]
    except SystemExit as exc:
        got = exc.code
    assert got == code


def test_parse_error_exit_code():
    code, _, err = run(["mine", "--min-sup", "1"], "1 2\n3 oops\n")
    assert code == 2 and "line 2" in err


def test_write_failure_reports_partial(sample_file, tmp_path):
    code, _, err = run(["mine", "--min-sup", "2", "--input", sample_file, "--output", str(tmp_path / "no" / "dir")])
    assert code == 3 and "partial" in err


def test_toggles_accepted_in_max_and_closed(sample_file):
    for mode in ("max", "closed"):
        base = run(["mine", "--mode", mode, "--min-sup", "2", "--input", sample_file, "--sorted"])[1]
        flags = ["--no-pep", "--no-fhut", "--no-hutmfi", "--no-pair-prune", "--no-erfco", "--projection", "full"]
        assert run(["mine", "--mode", mode, "--min-sup", "2", "--input", sample_file, "--sorted", *flags])[1] == base


def test_width_reported(sample_file, monkeypatch):
    monkeypatch.setenv("RAMP_WORD_WIDTH", "32")
    assert "width=32" in run(["mine", "--min-sup", "2", "--input", sample_file])[2]
    assert "width=8" in run(["mine", "--min-sup", "2", "--input", sample_file, "--width", "8"])[2]


def test_config_options_roundtrip():
    cfg = MineConfig(mode="max", min_sup="3", pep=False, projection="full")
    cfg.validate()
    opts = cfg.options()
    assert not opts.pep and opts.projection == "full" and opts.fhut


def test_gen_deterministic_and_parses(tmp_path):
    argv = ["gen", "--transactions", "100", "--items", "20", "--avg-len", "5", "--patterns", "8", "--seed", "1"]
    a, b = run(argv), run(argv)
    assert a[0] == 0 and a[1] == b[1] and a[1]
    db = parse_transactions(a[1])
    assert len(db) == 100 and db.to_fimi() == a[1]
    target = tmp_path / "g.dat"
    assert run([*argv, "--output", str(target)])[0] == 0
    assert target.read_text() == a[1]


def test_bench(sample_file):
    code, _, err = run(["bench", "--mode", "max", "--min-sup", "2", "--input", sample_file, "--repeat", "3"])
    assert code == 0 and "median" in err and "over 3 runs" in err


def test_module_entry_point(sample_file):
    proc = subprocess.run(
        [sys.executable, "-m", "ramp_fim", "mine", "--mode", "max", "--min-sup", "2", "--input", sample_file, "--sorted"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "0 1 2 (2)\n0 1 3 (2)\n4 (2)\n8 (2)\n"
