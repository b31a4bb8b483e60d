import pathlib

import pytest

from bcsq.cli import main

CONFIGS = pathlib.Path(__file__).parent.parent / "configs"


def run_cli(*argv):
    return main([str(a) for a in argv])


def test_overlap_csv_and_rerun_bytes(tmp_path):
    out = tmp_path / "fig3a.csv"
    rc = run_cli("overlap", "--config", CONFIGS / "fig3a.toml", "--out", out)
    assert rc == 0
    first = out.read_bytes()
    lines = first.decode().splitlines()
    assert lines[0] == "phi,re_W,im_W,abs_W,abs_W_gauss"
    assert len(lines) > 100
    rc = run_cli("overlap", "--config", CONFIGS / "fig3a.toml", "--out", out)
    assert rc == 0 and out.read_bytes() == first


def test_alpha_sweep_schema(tmp_path):
    out = tmp_path / "fig3b.csv"
    assert run_cli("overlap", "--config", CONFIGS / "fig3b.toml",
                   "--out", out) == 0
    assert out.read_text().splitlines()[0] == (
        "alpha_ratio,abs_W_exact,abs_W_gauss")


def test_subspace_csv_schema(tmp_path):
    out = tmp_path / "subspace.csv"
    assert run_cli("subspace", "--config", CONFIGS / "subspace.toml",
                   "--out", out) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "k,eigenvalue,significance,model_eigenvalue,d_eff"
    assert len(lines) == 81  # dim rows + header


def test_jobs_do_not_change_bytes(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run_cli("transmon", "--config", CONFIGS / "fig7ab.toml",
                   "--out", a) == 0
    assert run_cli("transmon", "--config", CONFIGS / "fig7ab.toml",
                   "--out", b, "--jobs", "4") == 0
    assert a.read_bytes() == b.read_bytes()


def test_json_format(tmp_path):
    out = tmp_path / "inductor.json"
    assert run_cli("inductor", "--config", CONFIGS / "inductor.toml",
                   "--out", out, "--format", "json") == 0
    assert out.read_text().lstrip().startswith("[")


def test_config_errors_exit_one(tmp_path):
    bad = tmp_path / "bad.toml"
    bad.write_text("[material]\nn = 100\nbandwidth = 10.0\ngap = 1.0\n"
                   "typo_key = 3\n")
    out = tmp_path / "x.csv"
    assert run_cli("overlap", "--config", bad, "--out", out) == 1
    assert not out.exists()


def test_numerical_failure_exits_two(tmp_path):
    cfg = tmp_path / "strong.toml"
    cfg.write_text("[material]\nn = 100\nbandwidth = 1.0\ncoupling = 2.0\n"
                   "\n[island]\nmode = \"gap\"\ngap_start = 0.05\n"
                   "gap_stop = 1.5\n")
    assert run_cli("island-energy", "--config", cfg,
                   "--out", tmp_path / "y.csv") == 2
    short = tmp_path / "short.toml"
    short.write_text("[material]\nn = 100\nbandwidth = 1.0\ngap = 0.1\n"
                     "\n[island]\nmode = \"gap\"\n")
    assert run_cli("island-energy", "--config", short,
                   "--out", tmp_path / "z.csv") == 1


def test_all_figures_rejects_config(tmp_path):
    assert run_cli("all-figures", "--config", CONFIGS / "fig3a.toml",
                   "--out", tmp_path) == 1


def test_seed_flag_is_accepted(tmp_path):
    out = tmp_path / "ops.csv"
    assert run_cli("operators", "--config", CONFIGS / "operators.toml",
                   "--out", out, "--seed", "7") == 0
    assert out.exists()
