"""
Main Click CLI entry aggregating all subcommands.
"""
import functools
from pathlib import Path

import click

from elastolbm.config import settings
from elastolbm.exceptions import SolverBaseException
from elastolbm.libs.consts.enums import ExitCode

from .converge import converge_process
from .datas.presets import converge_presets, run_presets, stability_presets
from .layers import failure, run_options
from .run import run_process
from .stability import check_process, stability_process


def exit_with_code(func):
    """Turn a process return value or a solver exception into the process exit code"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            code = func(*args, **kwargs)
        except SolverBaseException as exc:
            failure(f"{type(exc).__name__}: {exc}")
            ctx.exit(int(exc.exit_code))
        ctx.exit(int(code or ExitCode.OK))
    return wrapper


@click.group()
@click.version_option(version=settings.APP_VERSION, prog_name=settings.APP_NAME)
def cli():
    """elastolbm: lattice Boltzmann solver for 2D linear elastodynamics"""
    pass


@cli.command(name="run")
@click.option("--preset", type=click.Choice(sorted(run_presets)), help="Named run preset.")
@run_options
@exit_with_code
def run_cmd(preset, config_path, assignments, output_dir, workers, cfl_override):
    """Run one configuration and write fields, traces, error report and manifest."""
    return run_process(preset, config_path, assignments, output_dir, workers, cfl_override)


@cli.command(name="converge")
@click.option("--preset", type=click.Choice(sorted(converge_presets)), default="converge_periodic", show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--set", "assignments", multiple=True, metavar="KEY=VALUE", help="Override one study parameter.")
@click.option("--output-dir", type=str, default=None)
@click.option("--full", is_flag=True, help="Full refinement and material lists.")
@click.option("--concurrency", type=click.IntRange(min=1), default=None, help="Runs executed in parallel.")
@exit_with_code
def converge_cmd(preset, config_path, assignments, output_dir, full, concurrency):
    """Grid convergence study: order table and pass/fail against the required orders."""
    return converge_process(preset, config_path, assignments, output_dir, full, concurrency)


@cli.command(name="stability")
@click.option(
    "--preset", type=click.Choice(sorted(stability_presets)), default="long_stable", show_default=True
)
@run_options
@click.option("--cut-row", type=click.IntRange(min=0), default=None, help="Lattice row of the horizontal cut.")
@click.option("--refine", is_flag=True, help="Repeat on the refined lattice and compare norm traces.")
@click.option("--cut-tolerance", type=float, default=None, help="Fail when the cut L2rel exceeds this value.")
@exit_with_code
def stability_cmd(
    preset, config_path, assignments, output_dir, workers, cfl_override, cut_row, refine, cut_tolerance
):
    """Long-horizon run with norm and error traces and a horizontal cut."""
    return stability_process(
        preset, config_path, assignments, output_dir, workers, cfl_override, cut_row, refine, cut_tolerance
    )


@cli.command(name="check")
@click.option("--material", "materials", multiple=True, metavar="CK2,CMU2", help="Material to check; repeatable.")
@click.option("--c", "c", type=float, default=2.5, show_default=True, help="Lattice speed.")
@click.option("--omega", type=click.FloatRange(min=0.0, max=2.0, min_open=True), default=2.0, show_default=True)
@exit_with_code
def check_cmd(materials, c, omega):
    """Collision algebra and CFL checks."""
    return check_process(materials, c, omega)


def main() -> int:
    cli()
    return 0
