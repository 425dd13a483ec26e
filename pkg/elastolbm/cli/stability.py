"""
`stability` and `check`: long-horizon runs and collision-algebra checks
"""
from pathlib import Path
from typing import Iterable, Optional, Sequence

import click

from elastolbm.cli.datas.presets import stability_presets
from elastolbm.cli.layers import collect_layers, failure, invoked_command, success
from elastolbm.cli.run import echo_result
from elastolbm.container import Container
from elastolbm.exceptions import ConfigError, PairError
from elastolbm.handlers.stability import DEFAULT_CHECK_MATERIALS
from elastolbm.libs.consts.enums import ExitCode
from elastolbm.libs.shared import Converter
from elastolbm.schemas.report import AlgebraReport
from elastolbm.schemas.run_config import RunConfig


def stability_process(
    preset: Optional[str],
    config_path: Optional[Path],
    assignments: Iterable[str],
    output_dir: Optional[str],
    workers: Optional[int],
    cfl_override: Optional[bool],
    cut_row: Optional[int],
    refine: bool,
    cut_tolerance: Optional[float],
) -> int:
    config = RunConfig.from_layers(*collect_layers(
        preset,
        stability_presets,
        config_path,
        assignments,
        {"output_dir": output_dir, "cfl_override": cfl_override, "cut_row": cut_row},
    ))
    handler = Container().stability_handler()
    outcome = handler.long_run(config, refine=refine, command=invoked_command(), workers=workers)

    echo_result(outcome.result)
    if outcome.result.diverged:
        failure(f"{config.run_name}: unstable, diverged at step {outcome.result.divergence_step}")
        return ExitCode.DIVERGENCE

    code = ExitCode.OK
    if outcome.cut_l2rel is not None:
        click.echo(f"  horizontal cut L2rel {outcome.cut_l2rel:.6e}")
        if cut_tolerance is not None and not outcome.cut_l2rel <= cut_tolerance:
            failure(f"{config.run_name}: cut L2rel above {cut_tolerance:g}")
            code = ExitCode.THRESHOLD_MISSED
    if outcome.refined is not None:
        echo_result(outcome.refined)
        if outcome.refined.diverged:
            failure(f"{outcome.refined.config.run_name}: unstable")
            return ExitCode.DIVERGENCE
        agreement = outcome.agreement
        click.echo(
            f"  norm traces: {agreement.shared_points} shared times, "
            f"max relative difference {agreement.max_relative_difference:.3e}"
        )
        if not agreement.passed:
            failure(f"norm traces differ by more than {agreement.tolerance:g}")
            code = ExitCode.THRESHOLD_MISSED
    if code is ExitCode.OK:
        success(f"{config.run_name}: stable")
    return code


def parse_materials(values: Sequence[str]) -> list[tuple[float, float]]:
    if not values:
        return list(DEFAULT_CHECK_MATERIALS)
    try:
        return [Converter.to_pair(value) for value in values]
    except PairError as exc:
        raise ConfigError(f"--material expects cK2,cmu2: {exc}", debug_detail=exc) from exc


def echo_report(report: AlgebraReport) -> None:
    status = click.style("ok", fg="green") if report.passed else click.style("FAILED", fg="red")
    click.echo(
        f"({report.cK2:g},{report.cmu2:g}) c={report.c:g} omega={report.omega:g} "
        f"CFL margin {report.cfl.margin:.4f}: {status}"
    )
    for check in report.checks:
        mark = " " if check.passed else "!"
        click.echo(f"  {mark} {check.name:<36} {check.value:.3e} (tol {check.tolerance:.1e})")


def check_process(materials: Sequence[str], c: float, omega: float) -> int:
    reports = Container().stability_handler().check(parse_materials(materials), c=c, omega=omega)
    for report in reports:
        echo_report(report)
    if all(report.passed for report in reports):
        success("collision algebra checks passed")
        return ExitCode.OK
    failure("collision algebra checks failed")
    return ExitCode.CFL_REJECTED
