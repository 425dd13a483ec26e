"""
`run`: one configuration to t_final
"""
from pathlib import Path
from typing import Iterable, Optional

import click

from elastolbm.cli.datas.presets import run_presets
from elastolbm.cli.layers import collect_layers, failure, invoked_command, success
from elastolbm.container import Container
from elastolbm.handlers.simulation import RunResult
from elastolbm.libs.consts.enums import ExitCode, FieldName, NormName
from elastolbm.schemas.run_config import RunConfig


def echo_result(result: RunResult) -> None:
    config = result.config
    click.echo(
        f"{config.run_name}: {result.steps} steps on {result.lattice.discretization.nx}x"
        f"{result.lattice.discretization.ny} nodes, CFL margin {result.cfl.margin:.6g}"
    )
    if result.norm_trace:
        click.echo(f"  max norm drift  {result.max_drift:.3e}")
    if result.report is not None:
        for field in FieldName:
            norms = result.report.field(field)
            click.echo(
                f"  {field.value:<5} L2rel {norms.get(NormName.L2_REL):.6e}  "
                f"Linfrel {norms.get(NormName.LINF_REL):.6e}"
            )
    if result.run_dir is not None:
        click.echo(f"  artifacts in {result.run_dir}")


def run_process(
    preset: Optional[str],
    config_path: Optional[Path],
    assignments: Iterable[str],
    output_dir: Optional[str],
    workers: Optional[int],
    cfl_override: Optional[bool],
) -> int:
    config = RunConfig.from_layers(*collect_layers(
        preset,
        run_presets,
        config_path,
        assignments,
        {"output_dir": output_dir, "cfl_override": cfl_override},
    ))
    handler = Container().simulation_handler()
    result = handler.run(config, command=invoked_command(), workers=workers)
    echo_result(result)
    if result.diverged:
        failure(f"{config.run_name}: unstable, diverged at step {result.divergence_step}")
        return ExitCode.DIVERGENCE
    success(f"{config.run_name}: completed")
    return ExitCode.OK
