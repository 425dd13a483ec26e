"""
Tests for elastolbm.handlers.stability
"""
import math

import pytest

from elastolbm.handlers.stability import DEFAULT_CHECK_MATERIALS, StabilityHandler, refined_config
from elastolbm.schemas.run_config import RunConfig


def test_refined_config_halves_the_lattice(small_run_config: RunConfig) -> None:
    """
    The refined twin halves dx and dt and samples the same times.
    """
    twin = refined_config(small_run_config)
    assert twin.dx == small_run_config.dx / 2
    assert twin.dt == small_run_config.dt / 2
    assert twin.c == pytest.approx(small_run_config.c)
    assert twin.norm_stride == 2 * small_run_config.norm_stride
    assert twin.run_name == f"{small_run_config.run_name}_refined"
    assert twin.t_final == small_run_config.t_final


def test_check_passes_default_materials(stability_handler: StabilityHandler) -> None:
    reports = stability_handler.check()
    assert len(reports) == len(DEFAULT_CHECK_MATERIALS)
    assert all(report.passed and report.cfl.passed for report in reports)


def test_check_reports_missing_symmetrizer(stability_handler: StabilityHandler) -> None:
    """
    Without a symmetrizer the report holds a single failed check.
    """
    report, = stability_handler.check(materials=[(1.2, 0.4)])
    assert not report.passed
    assert not report.cfl.passed
    assert [check.name for check in report.checks] == ["k_ij positive definite"]
    assert math.isinf(report.checks[0].value)


def test_long_run_with_refinement(stability_handler: StabilityHandler, small_run_config: RunConfig) -> None:
    """
    Refined twin, trace agreement and the horizontal cut on a short run.
    """
    outcome = stability_handler.long_run(small_run_config, refine=True)
    assert not outcome.result.diverged
    assert not outcome.refined.diverged
    assert outcome.refined.steps == 2 * outcome.result.steps
    # both traces sample t = 0, 0.04, ..., 0.2
    assert outcome.agreement.shared_points == 6
    assert outcome.cut_l2rel is not None and outcome.cut_l2rel >= 0.0
    assert (outcome.result.run_dir / "cut_5.csv").is_file()


def test_long_run_of_unforced_case_has_no_cut(stability_handler: StabilityHandler, small_run_parameters, tmp_path) -> None:
    config = RunConfig.from_layers(
        small_run_parameters, {"case": "stability_ic", "mode": "dirichlet", "output_dir": str(tmp_path)}
    )
    outcome = stability_handler.long_run(config)
    assert outcome.cut_l2rel is None
    assert outcome.refined is None
    assert outcome.result.max_drift <= 1e-13
