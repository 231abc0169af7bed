import os
import subprocess
import sys

import pytest

from lpairs.cli import run


@pytest.fixture()
def zero_file(tmp_path, zeros100):
    path = tmp_path / "zeros100.txt"
    zeros100.save(path)
    return str(path)


def test_zeros_command_computes(tmp_path):
    out = tmp_path / "z.txt"
    assert run(["zeros", "--T", "20", "--zeros", "compute", "--output", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 1
    assert abs(float(lines[0]) - 14.134725141734694) < 1e-8


def test_landau_command(zero_file, tmp_path):
    out = tmp_path / "landau.csv"
    code = run(["landau", "--x", "2", "--T", "100", "--zeros", zero_file,
                "--output", str(out)])
    assert code == 0
    header, row = out.read_text().strip().splitlines()
    assert header.startswith("x,T,")
    cells = row.split(",")
    assert cells[0] == "2"
    assert float(cells[2]) != 0.0


def test_landau_rational_x(zero_file, tmp_path):
    out = tmp_path / "landau.csv"
    assert run(["landau", "--x", "15/2", "--T", "100", "--zeros", zero_file,
                "--output", str(out)]) == 0
    assert out.read_text().splitlines()[1].startswith("15/2,")


def test_config_error_nonprime_modulus(zero_file):
    assert run(["thm1", "--char1", "4:1", "--char2", "5:2",
                "--zeros", zero_file, "--T", "100"]) == 1


def test_config_error_bad_t():
    assert run(["zeros", "--T", "nope"]) == 1


def test_io_error_missing_zero_file(tmp_path):
    missing = str(tmp_path / "nowhere.txt")
    assert run(["landau", "--x", "2", "--T", "100", "--zeros", missing]) == 3


def test_io_error_bad_zero_file(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("14.1\ngarbage\n")
    assert run(["landau", "--x", "2", "--T", "100", "--zeros", str(bad)]) == 3


def test_env_var_default(zero_file, tmp_path, monkeypatch):
    monkeypatch.setenv("ZETA_ZEROS_PATH", zero_file)
    out = tmp_path / "landau.csv"
    assert run(["landau", "--x", "2", "--T", "100", "--output", str(out)]) == 0
    assert out.exists()


def test_thm1_reproducible_and_parallel_identical(zero_file, tmp_path):
    args = ["thm1", "--T", "100", "--sigma", "0.75", "--char1", "3:1",
            "--char2", "5:2", "--zeros", zero_file]
    outs = []
    for name, extra in (("a.csv", []), ("b.csv", []), ("c.csv", ["--parallel"])):
        path = tmp_path / name
        assert run(args + extra + ["--output", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_thm1_t_sweep_rows(zero_file, tmp_path):
    out = tmp_path / "sweep.csv"
    assert run(["thm1", "--T", "50,100", "--char1", "3:1", "--char2", "5:2",
                "--zeros", zero_file, "--output", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 3  # header + two rows


def test_thm2_command(zero_file, tmp_path):
    out = tmp_path / "thm2.csv"
    assert run(["thm2", "--T", "100", "--char1", "3:1", "--char2", "5:2",
                "--zeros", zero_file, "--output", str(out)]) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 2


def test_seed_check_runs(zero_file, tmp_path):
    out = tmp_path / "landau.csv"
    assert run(["landau", "--x", "2", "--T", "100", "--zeros", zero_file,
                "--seed-check", "--output", str(out)]) == 0


def test_numerics_error_maps_to_exit_2(zero_file, monkeypatch):
    from lpairs import cli as cli_mod
    from lpairs.errors import NumericsError

    def broken():
        raise NumericsError("probe failed")

    monkeypatch.setattr(cli_mod, "seed_check", broken)
    assert run(["landau", "--x", "2", "--T", "100", "--zeros", zero_file,
                "--seed-check"]) == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lpairs.cli", "--version"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
