"""
Plain key=value run manifests and config files
"""
from pathlib import Path
from typing import Mapping, Optional

from dotenv import dotenv_values

from elastolbm.exceptions import ArtifactIOError, ConfigError

__all__ = [
    "MANIFEST_NAME",
    "write_manifest",
    "read_key_values",
]

MANIFEST_NAME = "manifest.env"


def _quote(value: str) -> str:
    if any(char in value for char in " #'\"\t"):
        escaped = value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    return value


def write_manifest(
    path: Path,
    parameters: Mapping[str, str],
    code_version: str,
    command: Optional[str] = None,
) -> Path:
    """
    Echo every run parameter plus the code version and the invoking command.
    The file is readable back with `read_key_values`.
    :param path:
    :param parameters: flat string parameters, written in the given order
    :param code_version:
    :param command:
    :return:
    """
    lines = [f"{key}={_quote(str(value))}" for key, value in parameters.items()]
    lines.append(f"code_version={_quote(code_version)}")
    if command:
        lines.append(f"command={_quote(command)}")
    try:
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise ArtifactIOError(f"cannot write {path}: {exc}", debug_detail=exc) from exc
    return path


def read_key_values(path: Path) -> dict[str, str]:
    """
    Read a key=value file; blank lines and # comments are ignored.
    """
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file {path} does not exist")
    try:
        values = dotenv_values(path)
    except OSError as exc:
        raise ArtifactIOError(f"cannot read {path}: {exc}", debug_detail=exc) from exc
    return {key: value for key, value in values.items() if value is not None}
