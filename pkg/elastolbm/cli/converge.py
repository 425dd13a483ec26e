"""
`converge`: grid convergence study over materials and refinement levels
"""
from pathlib import Path
from typing import Iterable, Optional

import click

from elastolbm.cli.datas.presets import converge_presets, full_study_overrides
from elastolbm.cli.layers import failure, parse_assignments, resolve_preset, success
from elastolbm.container import Container
from elastolbm.libs.consts.enums import ExitCode
from elastolbm.libs.consts.lattice import ORDER_TABLE_COLUMNS
from elastolbm.schemas.report import StudySummary
from elastolbm.schemas.run_config import StudyConfig
from elastolbm.serializers import tables
from elastolbm.serializers.manifest import read_key_values


def echo_summary(summary: StudySummary) -> None:
    frame = tables.records_frame(summary.rows, ORDER_TABLE_COLUMNS)
    if not frame.empty:
        click.echo(frame.to_string(index=False, float_format=lambda value: f"{value:.4g}"))
    for name in summary.diverged:
        failure(f"diverged: {name}")
    for miss in summary.failures:
        observed = "n/a" if miss.observed_order is None else f"{miss.observed_order:.3f}"
        failure(
            f"({miss.cK2:g},{miss.cmu2:g}) {miss.field} {miss.norm}: "
            f"order {observed} below {miss.required:g}"
        )


def converge_process(
    preset: Optional[str],
    config_path: Optional[Path],
    assignments: Iterable[str],
    output_dir: Optional[str],
    full: bool,
    concurrency: Optional[int],
) -> int:
    study = StudyConfig.from_layers(
        resolve_preset(preset, converge_presets),
        full_study_overrides if full else {},
        read_key_values(config_path) if config_path else {},
        parse_assignments(assignments),
        {"output_dir": output_dir},
    )
    container = Container()
    if concurrency is not None:
        handler = container.verification_handler(concurrency=concurrency)
    else:
        handler = container.verification_handler()
    summary, _ = handler.convergence_study(study)
    echo_summary(summary)
    if not summary.passed:
        failure(f"{study.study_name}: convergence thresholds missed")
        return ExitCode.THRESHOLD_MISSED
    success(f"{study.study_name}: all required orders reached")
    return ExitCode.OK
