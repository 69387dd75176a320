import math

import pytest

from unruh_discord import cli
from unruh_discord.optimizer import OptimizerConfig
from unruh_discord.rindler import Pair, R_MAX
from unruh_discord.sweep import (
    CSV_HEADER,
    SweepConfig,
    evaluate_point,
    format_float,
    sweep_records,
    write_csv,
)

LIGHT_FLAGS = ["--theta-grid", "16", "--phi-grid", "8"]

# frozen from the closed-form route: C = H2(1/4) - H2((2+sqrt3)/4) at r=pi/4
C_AI_QUARTER_PI = 0.4566992217938628
D_AI_QUARTER_PI = 0.5433007782061372


# --- float formatting ---------------------------------------------------------

@pytest.mark.parametrize("value,expected", [
    (0.0, "0"),
    (1.0, "1.00000000000"),
    (0.5, "0.50000000000"),
    (1 / 3, "0.333333333333"),
    (2.5e-10, "0.000000000250000000000"),  # positional even far below 1e-4
    (0.811278124459133, "0.811278124459"),
])
def test_format_float(value, expected):
    assert format_float(value) == expected


# --- sweep engine ---------------------------------------------------------------

def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig(pairs=(Pair.AI,), steps=1)
    with pytest.raises(ValueError):
        SweepConfig(pairs=(Pair.AI,), r_min=0.2, r_max=0.1)
    with pytest.raises(ValueError):
        SweepConfig(pairs=(Pair.AI,), r_max=R_MAX + 0.1)
    with pytest.raises(ValueError):
        SweepConfig(pairs=())


def test_degenerate_sweep_rows_are_bell_values(light_config):
    config = SweepConfig(pairs=(Pair.AI,), r_min=0.0, r_max=0.0, steps=2,
                         optimizer=light_config)
    rows = list(sweep_records(config))
    assert len(rows) == 2
    for row in rows:
        assert row.mutual_information == pytest.approx(2.0, abs=1e-6)
        assert row.classical_correlation == pytest.approx(1.0, abs=1e-6)
        assert row.quantum_discord == pytest.approx(1.0, abs=1e-6)
        assert row.log_negativity == pytest.approx(1.0, abs=1e-6)
    assert rows[0].csv_row() == rows[1].csv_row()


def test_sweep_grouping_and_order(light_config):
    config = SweepConfig(pairs=(Pair.AI, Pair.AII, Pair.III), steps=5,
                         optimizer=light_config)
    rows = list(sweep_records(config))
    assert len(rows) == 15
    assert [row.pair.value for row in rows] == ["AI"] * 5 + ["AII"] * 5 + ["III"] * 5
    for chunk in (rows[:5], rows[5:10], rows[10:]):
        r_list = [row.r for row in chunk]
        assert r_list == sorted(r_list)
        assert r_list[0] == 0.0
        assert r_list[-1] == pytest.approx(R_MAX, abs=1e-15)


def test_sweep_final_row_matches_closed_form_oracle(light_config):
    config = SweepConfig(pairs=(Pair.AI,), steps=50, optimizer=light_config)
    rows = list(sweep_records(config))
    assert len(rows) == 50
    last = rows[-1]
    assert last.r == pytest.approx(R_MAX, abs=1e-15)
    assert last.classical_correlation == pytest.approx(C_AI_QUARTER_PI, abs=1e-9)
    assert last.quantum_discord == pytest.approx(D_AI_QUARTER_PI, abs=1e-9)
    for row in rows:
        gap = row.mutual_information - row.classical_correlation - row.quantum_discord
        assert abs(gap) <= 1e-9


def test_write_csv_counts_rows(tmp_path, light_config):
    config = SweepConfig(pairs=(Pair.AII,), steps=3, optimizer=light_config)
    out = tmp_path / "rows.csv"
    with open(out, "w") as stream:
        count = write_csv(sweep_records(config), stream)
    assert count == 3
    lines = out.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 4


def test_evaluate_point_rejects_out_of_range_r():
    with pytest.raises(ValueError):
        evaluate_point(1.0, Pair.AI, OptimizerConfig(8, 8))


# --- CLI: sweep ------------------------------------------------------------------

def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cli_sweep_deterministic_output(capsys):
    argv = ["sweep", "--pair", "AI", "--steps", "4", *LIGHT_FLAGS]
    code1, out1, _ = run_cli(capsys, argv)
    code2, out2, _ = run_cli(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert out1.splitlines()[0] == CSV_HEADER
    assert len(out1.splitlines()) == 5


def test_cli_sweep_all_groups(capsys):
    code, out, _ = run_cli(capsys, ["sweep", "--pair", "ALL", "--steps", "2", *LIGHT_FLAGS])
    assert code == 0
    rows = out.splitlines()[1:]
    assert len(rows) == 6
    assert [row.split(",")[1] for row in rows] == ["AI", "AI", "AII", "AII", "III", "III"]


def test_cli_sweep_to_file(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    code, _, _ = run_cli(capsys, [
        "sweep", "--pair", "AI", "--steps", "2", "--out", str(out_path), *LIGHT_FLAGS])
    assert code == 0
    assert out_path.read_text().splitlines()[0] == CSV_HEADER


@pytest.mark.parametrize("argv", [
    ["sweep", "--steps", "1"],
    ["sweep", "--r-min", "0.3", "--r-max", "0.1"],
    ["sweep", "--r-max", "1.0"],
    ["sweep", "--theta-grid", "4"],
])
def test_cli_sweep_config_errors_exit_2(capsys, argv):
    code, _, err = run_cli(capsys, argv)
    assert code == 2
    assert "error" in err


def test_cli_sweep_numeric_failure_exit_3(capsys):
    code, _, err = run_cli(capsys, [
        "sweep", "--pair", "AI", "--steps", "2", "--refine-tol", "1e-13",
        "--max-refine-iters", "1", *LIGHT_FLAGS])
    assert code == 3
    assert "numeric failure at r=" in err


# --- CLI: point --------------------------------------------------------------------

def test_cli_point_bell(capsys):
    code, out, _ = run_cli(capsys, ["point", "--pair", "AI", "--r", "0", *LIGHT_FLAGS])
    assert code == 0
    assert "mutual_information: 2.00000000000" in out
    assert "classical_correlation: 1.00000000000" in out
    assert "quantum_discord: 1.00000000000" in out
    assert "log_negativity: 1.00000000000" in out
    assert CSV_HEADER in out


def test_cli_point_hidden_pair_zero(capsys):
    code, out, _ = run_cli(capsys, ["point", "--pair", "AII", "--r", "0", *LIGHT_FLAGS])
    assert code == 0
    for name in ("mutual_information", "classical_correlation",
                 "quantum_discord", "log_negativity"):
        assert f"{name}: 0" in out


def test_cli_point_physical_parameters_echo_r(capsys):
    a = 2 * math.pi / math.log(3.0)
    code, out, _ = run_cli(capsys, [
        "point", "--pair", "AI", "--omega", "1", "--a", str(a), *LIGHT_FLAGS])
    assert code == 0
    assert f"r: {format_float(math.pi / 6)}" in out
    assert "from omega=" in out


@pytest.mark.parametrize("argv", [
    ["point", "--pair", "AI"],                                  # neither
    ["point", "--pair", "AI", "--r", "0.1", "--omega", "1", "--a", "2"],  # both
    ["point", "--pair", "AI", "--omega", "1"],                  # half physical
])
def test_cli_point_parameterization_errors_exit_2(capsys, argv):
    code, _, err = run_cli(capsys, argv)
    assert code == 2
    assert "error" in err


def test_cli_unknown_arguments_exit_2():
    with pytest.raises(SystemExit) as excinfo:
        cli.main(["sweep", "--bogus"])
    assert excinfo.value.code == 2


# --- CLI: verify ----------------------------------------------------------------

def test_cli_verify_grid_steps_precondition(capsys):
    code, _, err = run_cli(capsys, ["verify", "--grid-steps", "9"])
    assert code == 2
    assert "grid-steps" in err


def test_cli_verify_report_and_exit_code(capsys):
    code, out, _ = run_cli(capsys, ["verify", "--grid-steps", "10", *LIGHT_FLAGS])
    # exit 0 iff no hard FAIL lines; the one expected FAIL is the strict
    # increase of the I-II classical correlation, which genuinely reverses
    # close to r = pi/4
    fail_lines = [ln for ln in out.splitlines() if ln.startswith("FAIL")]
    assert code == (1 if fail_lines else 0)
    assert any(ln.startswith("SOFT") for ln in out.splitlines())
    for line in fail_lines:
        assert "C strictly increasing for III" in line


# --- CLI: figures ---------------------------------------------------------------

def test_cli_figures_writes_csv_and_png(tmp_path, capsys):
    out_dir = tmp_path / "figs"
    code, out, _ = run_cli(capsys, [
        "figures", "--out-dir", str(out_dir), "--steps", "4", *LIGHT_FLAGS])
    assert code == 0
    for pair in ("AI", "AII", "III"):
        assert (out_dir / f"correlations_{pair}.csv").exists()
        assert (out_dir / f"correlations_{pair}.png").exists()
    assert (out_dir / "discord_comparison.png").exists()
    assert (out_dir / "classical_comparison.png").exists()
    assert (out_dir / "conditional_entropy_AI.png").exists()
    assert (out_dir / "conditional_entropy_AI.csv").exists()
    header = (out_dir / "correlations_AI.csv").read_text().splitlines()[0]
    assert header == CSV_HEADER
