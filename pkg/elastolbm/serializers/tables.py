"""
CSV tables and JSON reports written by the runs
"""
import math
from pathlib import Path
from typing import Iterable, Sequence

import pandas as pd
import ujson
from pydantic import BaseModel

from elastolbm.exceptions import ArtifactIOError
from elastolbm.libs.consts.lattice import (
    CUT_COLUMNS,
    ERROR_TRACE_COLUMNS,
    NORM_TRACE_COLUMNS,
    ORDER_TABLE_COLUMNS,
)
from elastolbm.libs.logger import logger

__all__ = [
    "FLOAT_FORMAT",
    "ensure_dir",
    "snapshot_path",
    "write_table",
    "load_table",
    "records_frame",
    "write_records",
    "write_norm_trace",
    "write_error_trace",
    "write_order_table",
    "write_cut",
    "write_json",
    "read_json",
]

# shortest format that round-trips every double
FLOAT_FORMAT = "%.17g"


def ensure_dir(path: Path) -> Path:
    try:
        path.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ArtifactIOError(f"cannot create directory {path}: {exc}", debug_detail=exc) from exc
    return path


def snapshot_path(run_dir: Path, step: int) -> Path:
    return run_dir / f"fields_{step:07d}.csv"


def write_table(frame: pd.DataFrame, path: Path) -> Path:
    """
    Write a table with full double precision; identical frames give identical bytes.
    """
    try:
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    except OSError as exc:
        raise ArtifactIOError(f"cannot write {path}: {exc}", debug_detail=exc) from exc
    logger.debug(f"Wrote {path}")
    return path


def load_table(path: Path) -> pd.DataFrame:
    try:
        return pd.read_csv(path, float_precision="round_trip")
    except OSError as exc:
        raise ArtifactIOError(f"cannot read {path}: {exc}", debug_detail=exc) from exc


def records_frame(records: Iterable[BaseModel], columns: Sequence[str]) -> pd.DataFrame:
    rows = [record.model_dump(include=set(columns)) for record in records]
    return pd.DataFrame(rows, columns=list(columns))


def write_records(records: Iterable[BaseModel], columns: Sequence[str], path: Path) -> Path:
    return write_table(records_frame(records, columns), path)


def write_norm_trace(points: Iterable[BaseModel], path: Path) -> Path:
    return write_records(points, NORM_TRACE_COLUMNS, path)


def write_error_trace(points: Iterable[BaseModel], path: Path) -> Path:
    return write_records(points, ERROR_TRACE_COLUMNS, path)


def write_order_table(rows: Iterable[BaseModel], path: Path) -> Path:
    return write_records(rows, ORDER_TABLE_COLUMNS, path)


def write_cut(frame: pd.DataFrame, path: Path) -> Path:
    return write_table(frame[list(CUT_COLUMNS)], path)


def _finite(value):
    """JSON has no NaN or infinity; they are written as null"""
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, dict):
        return {key: _finite(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_finite(item) for item in value]
    return value


def write_json(report: BaseModel, path: Path) -> Path:
    payload = _finite(report.model_dump(mode="json"))
    try:
        with open(path, "w", encoding="utf-8") as file:
            file.write(ujson.dumps(payload, indent=2, escape_forward_slashes=False))
            file.write("\n")
    except OSError as exc:
        raise ArtifactIOError(f"cannot write {path}: {exc}", debug_detail=exc) from exc
    logger.debug(f"Wrote {path}")
    return path


def read_json(path: Path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as file:
            return ujson.loads(file.read())
    except OSError as exc:
        raise ArtifactIOError(f"cannot read {path}: {exc}", debug_detail=exc) from exc
