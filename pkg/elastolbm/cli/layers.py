"""
Parameter layering shared by the CLI commands.
"""
import shlex
import sys
from pathlib import Path
from typing import Iterable, Mapping, Optional

import click

from elastolbm.exceptions import AssignmentError, ConfigError
from elastolbm.libs.shared import Converter
from elastolbm.serializers.manifest import read_key_values


def parse_assignments(pairs: Iterable[str]) -> dict[str, str]:
    """
    --set key=value pairs; the last assignment of a key wins.
    """
    values: dict[str, str] = {}
    for pair in pairs:
        try:
            key, value = Converter.to_assignment(pair)
        except AssignmentError as exc:
            raise ConfigError(f"--set expects key=value, got {pair!r}", debug_detail=exc) from exc
        values[key] = value
    return values


def resolve_preset(name: Optional[str], presets: Mapping[str, Mapping[str, str]]) -> dict[str, str]:
    if name is None:
        return {}
    if name not in presets:
        raise ConfigError(f"unknown preset {name!r}, expected one of {sorted(presets)}")
    return dict(presets[name])


def collect_layers(
    preset: Optional[str],
    presets: Mapping[str, Mapping[str, str]],
    config_path: Optional[Path],
    assignments: Iterable[str],
    explicit: Optional[Mapping[str, object]] = None,
) -> list[dict]:
    """
    Layers in override order: preset, config file, --set pairs, explicit options.
    """
    return [
        resolve_preset(preset, presets),
        read_key_values(config_path) if config_path else {},
        parse_assignments(assignments),
        dict(explicit or {}),
    ]


def run_options(func):
    """Options shared by `run` and `stability`"""
    options = [
        click.option(
            "--config", "config_path",
            type=click.Path(exists=True, dir_okay=False, path_type=Path),
            help="Key/value config file, e.g. a manifest.env of an earlier run.",
        ),
        click.option("--set", "assignments", multiple=True, metavar="KEY=VALUE", help="Override one parameter."),
        click.option("--output-dir", type=str, default=None, help="Parent directory of the run directory."),
        click.option("--workers", type=click.IntRange(min=1), default=None, help="Threads for node partitions."),
        click.option("--cfl-override/--no-cfl-override", default=None, help="Run even when the CFL condition fails."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def invoked_command() -> str:
    return shlex.join(["elastolbm", *sys.argv[1:]])


def success(message: str) -> None:
    click.secho(message, fg="green")


def failure(message: str) -> None:
    click.secho(message, fg="red", err=True)
