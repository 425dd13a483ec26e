"""
Tests for elastolbm.handlers.simulation
"""
import numpy as np
import pytest

from elastolbm.exceptions import CFLRejectedError, ConfigError
from elastolbm.handlers.simulation import SimulationHandler
from elastolbm.libs.consts.enums import RunStatus
from elastolbm.schemas.run_config import RunConfig
from elastolbm.serializers import tables
from elastolbm.serializers.manifest import MANIFEST_NAME, read_key_values


def test_small_run_writes_artifacts(simulation_handler: SimulationHandler, small_run_config: RunConfig) -> None:
    """
    A five step run writes the manifest, the final snapshot, both traces and the report.
    """
    result = simulation_handler.run(small_run_config, command="elastolbm run --preset wave52_periodic")
    assert result.status is RunStatus.COMPLETED
    assert result.steps == 5
    assert result.cfl.passed

    run_dir = result.run_dir
    assert run_dir.name == small_run_config.run_name
    for name in (MANIFEST_NAME, "fields_0000005.csv", "norm_trace.csv", "error_trace.csv", "error_report.json"):
        assert (run_dir / name).is_file()
    assert not (run_dir / "fields_0000000.csv").exists()

    assert [point.step for point in result.norm_trace] == [0, 1, 2, 3, 4, 5]
    assert [point.step for point in result.error_trace] == [0, 1, 2, 3, 4, 5]
    assert result.report.slices == 5
    assert result.report.steps == 5
    assert result.report.u.L2rel > 0.0
    assert result.final_fields.step == 5
    assert result.final_fields.time == pytest.approx(0.2)


def test_error_report_reloads(simulation_handler: SimulationHandler, small_run_config: RunConfig) -> None:
    result = simulation_handler.run(small_run_config)
    payload = tables.read_json(result.run_dir / "error_report.json")
    assert payload["case"] == "wave52"
    assert payload["status"] == "completed"
    assert payload["u"]["L2"] == pytest.approx(result.report.u.L2, rel=1e-12)


def test_manifest_reproduces_the_run_config(simulation_handler: SimulationHandler, small_run_config: RunConfig) -> None:
    """
    Reading the manifest back yields the same RunConfig.
    """
    result = simulation_handler.run(small_run_config, command="elastolbm run")
    values = read_key_values(result.run_dir / MANIFEST_NAME)
    assert values["command"] == "elastolbm run"
    assert values["code_version"]
    assert RunConfig.from_layers(values) == small_run_config


def test_snapshot_stride(simulation_handler: SimulationHandler, small_run_parameters, tmp_path) -> None:
    """
    Snapshots land on every multiple of the stride plus the final step.
    """
    config = RunConfig.from_layers(small_run_parameters, {"snapshot_stride": "2", "output_dir": str(tmp_path)})
    result = simulation_handler.run(config)
    written = sorted(path.name for path in result.run_dir.glob("fields_*.csv"))
    assert written == ["fields_0000000.csv", "fields_0000002.csv", "fields_0000004.csv", "fields_0000005.csv"]


def test_run_without_artifacts(simulation_handler: SimulationHandler, small_run_config: RunConfig) -> None:
    result = simulation_handler.run(small_run_config, write_artifacts=False)
    assert result.run_dir is None
    assert not result.artifacts
    assert result.report is not None


def test_runs_are_reproducible(simulation_handler: SimulationHandler, small_run_config: RunConfig) -> None:
    """
    Worker count does not change a single bit of the fields or the norm trace.
    """
    first = simulation_handler.run(small_run_config, write_artifacts=False)
    second = simulation_handler.run(small_run_config, write_artifacts=False, workers=3)
    assert np.array_equal(first.final_fields.u, second.final_fields.u)
    assert np.array_equal(first.final_fields.sigma, second.final_fields.sigma)
    assert [point.norm for point in first.norm_trace] == [point.norm for point in second.norm_trace]


def test_cfl_violation_is_rejected(simulation_handler: SimulationHandler, small_run_parameters) -> None:
    config = RunConfig.from_layers(small_run_parameters, {"cK2": "1.2"})
    with pytest.raises(CFLRejectedError) as exc_info:
        simulation_handler.run(config)
    assert exc_info.value.margin > 1.0


def test_overridden_cfl_violation_diverges(simulation_handler: SimulationHandler, small_run_parameters, tmp_path) -> None:
    """
    Under override an unstable material runs until the norm monitor stops it.
    """
    config = RunConfig.from_layers(
        small_run_parameters,
        {"cK2": "4", "cmu2": "1", "t_final": "20", "cfl_override": "true", "output_dir": str(tmp_path)},
    )
    result = simulation_handler.run(config)
    assert not result.cfl.passed
    assert result.diverged
    assert 0 < result.divergence_step < 500
    assert result.report.status is RunStatus.UNSTABLE
    assert result.final_fields is not None and result.final_fields.is_finite()
    assert list(result.run_dir.glob("fields_*.csv"))


def test_stability_ic_run_has_no_error_report(simulation_handler: SimulationHandler, small_run_parameters) -> None:
    """
    The unforced case has no exact solution to report against.
    """
    config = RunConfig.from_layers(small_run_parameters, {"case": "stability_ic", "mode": "dirichlet"})
    result = simulation_handler.run(config, write_artifacts=False)
    assert result.report is None
    assert not result.error_trace
    # homogeneous walls, no load
    assert result.max_drift <= 1e-13


@pytest.mark.parametrize(
    "override",
    [{"dx": "0.3"}, {"t_final": "0.21"}, {"omega": "2.5"}, {"unknown": "1"}, {"mode": "open"}],
)
def test_invalid_run_configs(simulation_handler: SimulationHandler, small_run_parameters, override) -> None:
    with pytest.raises(ConfigError):
        simulation_handler.run(RunConfig.from_layers(small_run_parameters, override))


def test_norm_monitoring_is_read_only(simulation_handler: SimulationHandler, small_run_parameters) -> None:
    """
    Recording the norm every step or never after the start leaves the fields bit identical.
    """
    finals = []
    for stride in ("1", "1000"):
        config = RunConfig.from_layers(small_run_parameters, {"norm_stride": stride})
        result = simulation_handler.run(config, write_artifacts=False)
        finals.append(result.final_fields)
    dense, sparse = finals
    assert np.array_equal(dense.u, sparse.u)
    assert np.array_equal(dense.v, sparse.v)
    assert np.array_equal(dense.sigma, sparse.sigma)
