"""End-to-end CLI coverage with golden output files (small n)."""

import io
import contextlib
import os

import pytest

from smallmatroids.cli import main
from smallmatroids.core import to_text, uniform_matroid

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")

from test_core import fano


def run_cli(argv, stdin_text=None):
    buf = io.StringIO()
    if stdin_text is not None:
        stdin = io.StringIO(stdin_text)
        import sys

        old = sys.stdin
        sys.stdin = stdin
        try:
            with contextlib.redirect_stdout(buf):
                code = main(argv)
        finally:
            sys.stdin = old
    else:
        with contextlib.redirect_stdout(buf):
            code = main(argv)
    return code, buf.getvalue()


GOLDEN_CASES = {
    "tables_n5.md": ["tables", "--max-n", "5", "--format", "md"],
    "tables_n5.csv": ["tables", "--max-n", "5", "--format", "csv"],
    "tables_n4.txt": ["tables", "--max-n", "4"],
    "tables_entry.txt": ["tables", "--max-n", "5", "--n", "5", "--r", "2",
                         "--k", "0", "--iso", "nonisomorphic"],
    "formulas_all.csv": ["formulas", "--check", "all", "--n", "2..8"],
    "formulas_lowrank.csv": ["formulas", "--check", "low-rank", "--n", "2..8"],
    "paving_bound_7.csv": ["paving-bound", "--n", "7"],
    "paving_bound_15.csv": ["paving-bound", "--n", "15", "--rmax", "8"],
    "plp_5.txt": ["plp", "--n", "5"],
    "plp_5.csv": ["plp", "--n", "5", "--format", "csv"],
    "dominance_5.txt": ["dominance", "--n", "5"],
    "random_seed42.txt": ["random-matroid", "--n", "6", "--seed", "42"],
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_outputs(name):
    code, out = run_cli(GOLDEN_CASES[name])
    assert code == 0
    with open(os.path.join(GOLDEN, name)) as fh:
        assert out == fh.read()


def test_paving_bound_example_row():
    code, out = run_cli(["paving-bound", "--n", "15", "--rmax", "8"])
    assert code == 0
    assert "5,168,2^168" in out.splitlines()


def test_free_erect_trivial_for_seven_line_plane():
    code, out = run_cli(["free-erect"], stdin_text=to_text(fano()))
    assert code == 0
    assert out == "trivial\n"


def test_free_erect_file(tmp_path):
    path = tmp_path / "u23.matroid"
    path.write_text(to_text(uniform_matroid(2, 3)))
    code, out = run_cli(["free-erect", str(path)])
    assert code == 0
    assert out == to_text(uniform_matroid(3, 3))


def test_erections_output():
    code, out = run_cli(["erections"], stdin_text=to_text(uniform_matroid(2, 3)))
    assert code == 0
    assert out.splitlines()[0] == "1"
    assert "n 3 r 3" in out
    code, out = run_cli(["erections"], stdin_text=to_text(fano()))
    assert code == 0
    assert out == "0\n"


@pytest.mark.parametrize("text,code", [
    ("garbage\n", 64),
    ("matroid 1\nn 3 r 2\nbases 2\n1 2\n1 2\n", 65),
    ("matroid 1\nn 3 r 2\nbases 2\n1 2\n1 2 3\n", 66),
    ("matroid 1\nn 4 r 2\nbases 2\n1 2\n3 4\n", 67),
])
def test_parser_exit_codes(text, code):
    got, _ = run_cli(["free-erect"], stdin_text=text)
    assert got == code


def test_budget_exit_code():
    code, _ = run_cli(["tables", "--max-n", "5", "--budget", "10"])
    assert code == 2


def test_long_run_gate():
    code, _ = run_cli(["tables", "--max-n", "8"])
    assert code == 2


def test_usage_error_exit_code():
    code, _ = run_cli(["plp"])  # missing required --n
    assert code == 64
    code, _ = run_cli(["no-such-command"])
    assert code == 64


def test_out_flag(tmp_path):
    target = tmp_path / "out.csv"
    code, out = run_cli(["paving-bound", "--n", "7", "--out", str(target)])
    assert code == 0
    assert out == ""
    with open(os.path.join(GOLDEN, "paving_bound_7.csv")) as fh:
        assert target.read_text() == fh.read()


def test_config_file(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("n 15\nrmax 8\n")
    code, out = run_cli(["--config", str(cfg), "paving-bound"])
    assert code == 0
    with open(os.path.join(GOLDEN, "paving_bound_15.csv")) as fh:
        assert out == fh.read()
    # command-line flags win over the config file
    code, out = run_cli(["--config", str(cfg), "paving-bound", "--rmax", "4"])
    assert code == 0
    assert out.splitlines()[-1].startswith("4,")


def test_workers_flag_identical_output():
    _, a = run_cli(["tables", "--max-n", "5", "--format", "csv"])
    _, b = run_cli(["tables", "--max-n", "5", "--format", "csv",
                    "--workers", "4"])
    assert a == b
