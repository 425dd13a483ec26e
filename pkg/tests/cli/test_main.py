"""
Tests for elastolbm.cli.main
"""
import pytest
from click.testing import CliRunner

from elastolbm.cli import cli
from elastolbm.cli.layers import collect_layers, parse_assignments
from elastolbm.config import settings
from elastolbm.exceptions import ConfigError
from elastolbm.libs.consts.enums import ExitCode
from elastolbm.serializers.manifest import MANIFEST_NAME

SMALL_RUN = ("--set", "dx=1/10", "--set", "dt=1/25", "--set", "t_final=1/5")


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def test_version(runner: CliRunner) -> None:
    """
    --version prints the configured application version.
    """
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert settings.APP_VERSION in result.output


def test_check_default_materials(runner: CliRunner) -> None:
    """
    check without --material runs the default material list and exits 0.
    """
    result = runner.invoke(cli, ["check"])
    assert result.exit_code == ExitCode.OK
    assert "(1.1,0.4)" in result.output


def test_check_rejects_unstable_material(runner: CliRunner) -> None:
    """
    A material without a positive definite symmetrizer exits with the CFL code.
    """
    result = runner.invoke(cli, ["check", "--material", "1.2,0.4"])
    assert result.exit_code == ExitCode.CFL_REJECTED


def test_check_rejects_malformed_material(runner: CliRunner) -> None:
    result = runner.invoke(cli, ["check", "--material", "1.2"])
    assert result.exit_code == ExitCode.CONFIG_ERROR


def test_run_small_preset(runner: CliRunner, tmp_path) -> None:
    """
    A shortened preset run writes one manifest and prints the error summary.
    """
    result = runner.invoke(cli, ["run", "--preset", "wave52_periodic", *SMALL_RUN, "--output-dir", str(tmp_path)])
    assert result.exit_code == ExitCode.OK, result.output
    manifests = list(tmp_path.glob(f"*/{MANIFEST_NAME}"))
    assert len(manifests) == 1
    assert "L2rel" in result.output


def test_run_from_manifest(runner: CliRunner, tmp_path) -> None:
    """
    A written manifest is accepted back as --config.
    """
    first = runner.invoke(cli, ["run", "--preset", "wave52_periodic", *SMALL_RUN, "--output-dir", str(tmp_path)])
    assert first.exit_code == ExitCode.OK
    manifest, = tmp_path.glob(f"*/{MANIFEST_NAME}")
    again = runner.invoke(cli, ["run", "--config", str(manifest), "--output-dir", str(tmp_path / "again")])
    assert again.exit_code == ExitCode.OK, again.output
    assert (tmp_path / "again" / manifest.parent.name / MANIFEST_NAME).is_file()


def test_run_rejects_malformed_assignment(runner: CliRunner, tmp_path) -> None:
    result = runner.invoke(cli, ["run", "--preset", "wave52_periodic", "--set", "dx", "--output-dir", str(tmp_path)])
    assert result.exit_code == ExitCode.CONFIG_ERROR


def test_run_without_parameters(runner: CliRunner, tmp_path) -> None:
    """
    Without preset or config the required parameters are missing.
    """
    result = runner.invoke(cli, ["run", "--output-dir", str(tmp_path)])
    assert result.exit_code == ExitCode.CONFIG_ERROR


def test_run_unknown_preset_is_a_usage_error(runner: CliRunner) -> None:
    result = runner.invoke(cli, ["run", "--preset", "nonexistent"])
    assert result.exit_code == ExitCode.CONFIG_ERROR


def test_run_rejects_cfl_violation(runner: CliRunner, tmp_path) -> None:
    result = runner.invoke(
        cli,
        ["run", "--preset", "wave52_periodic", *SMALL_RUN, "--set", "cK2=1.2", "--output-dir", str(tmp_path)],
    )
    assert result.exit_code == ExitCode.CFL_REJECTED


def test_run_reports_divergence(runner: CliRunner, tmp_path) -> None:
    """
    An overridden CFL violation ends with the divergence exit code.
    """
    result = runner.invoke(
        cli,
        [
            "run", "--preset", "wave52_periodic", *SMALL_RUN,
            "--set", "cK2=4", "--set", "cmu2=1", "--set", "t_final=20",
            "--cfl-override", "--output-dir", str(tmp_path),
        ],
    )
    assert result.exit_code == ExitCode.DIVERGENCE


def test_converge_rejects_empty_discretizations(runner: CliRunner, tmp_path) -> None:
    result = runner.invoke(cli, ["converge", "--set", "discretizations=", "--output-dir", str(tmp_path)])
    assert result.exit_code == ExitCode.CONFIG_ERROR


def test_converge_rejects_cfl_violation(runner: CliRunner, tmp_path) -> None:
    """
    One rejected material fails the whole study before any run.
    """
    result = runner.invoke(
        cli,
        ["converge", "--set", "materials=1.1,0.4;1.2,0.4", "--set", "discretizations=1/10,1/25", "--output-dir", str(tmp_path)],
    )
    assert result.exit_code == ExitCode.CFL_REJECTED


def test_stability_small_run(runner: CliRunner, tmp_path) -> None:
    result = runner.invoke(
        cli, ["stability", "--preset", "wave52_periodic", *SMALL_RUN, "--output-dir", str(tmp_path)]
    )
    assert result.exit_code == ExitCode.OK, result.output
    assert "horizontal cut" in result.output


def test_stability_cut_tolerance(runner: CliRunner, tmp_path) -> None:
    """
    A cut tolerance below the discretization error is a missed threshold.
    """
    result = runner.invoke(
        cli,
        ["stability", "--preset", "wave52_periodic", *SMALL_RUN, "--cut-tolerance", "1e-12", "--output-dir", str(tmp_path)],
    )
    assert result.exit_code == ExitCode.THRESHOLD_MISSED


def test_parse_assignments_last_wins() -> None:
    assert parse_assignments(["dx=1/10", "dx=1/20"]) == {"dx": "1/20"}
    with pytest.raises(ConfigError):
        parse_assignments(["=3"])


def test_layers_override_in_order(tmp_path) -> None:
    """
    Preset, config file, --set and options override each other in that order.
    """
    path = tmp_path / "run.env"
    path.write_text("dx=1/20\ndt=1/50\n")
    presets = {"small": {"dx": "1/10", "dt": "1/25", "cK2": "1.1"}}
    layers = collect_layers("small", presets, path, ["dt=1/100"], {"output_dir": None})
    merged = {}
    for layer in layers:
        merged.update({key: value for key, value in layer.items() if value is not None})
    assert merged == {"dx": "1/20", "dt": "1/100", "cK2": "1.1"}
    with pytest.raises(ConfigError):
        collect_layers("absent", presets, None, [])
