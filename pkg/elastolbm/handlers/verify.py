"""
Error norms, convergence orders and trace comparisons
"""
import math
from collections import defaultdict
from functools import partial
from pathlib import Path
from typing import TYPE_CHECKING, Callable, Iterable, Optional, Sequence

import numpy as np
import pandas as pd

from elastolbm.exceptions import CFLRejectedError, ConfigError
from elastolbm.libs.consts.enums import BoundaryMode, FieldName, NormName, RunStatus
from elastolbm.libs.consts.lattice import CUT_COLUMNS
from elastolbm.libs.decorators.timer import timer
from elastolbm.libs.logger import logger
from elastolbm.libs.utils.async_worker import run_concurrently
from elastolbm.providers.mms import ManufacturedCase, exact_displacement, exact_stress
from elastolbm.schemas.material import Material
from elastolbm.schemas.report import (
    ErrorReport,
    ErrorTracePoint,
    FieldErrorNorms,
    NormAgreement,
    NormTracePoint,
    OrderRow,
    StudySummary,
    ThresholdFailure,
)
from elastolbm.schemas.run_config import StudyConfig
from elastolbm.serializers import tables
from elastolbm.solver.grid import Lattice
from elastolbm.solver.postprocess import DerivedFields
from elastolbm.solver.stabmon import cfl_check

if TYPE_CHECKING:
    from elastolbm.handlers.simulation import RunResult, SimulationHandler

__all__ = [
    "ErrorAccumulator",
    "RunErrorTracker",
    "error_norms",
    "spatial_error",
    "spatial_error_trace",
    "observed_order",
    "order_table",
    "required_orders",
    "evaluate_thresholds",
    "norm_trace_agreement",
    "horizontal_cut",
    "default_cut_row",
    "VerificationHandler",
]

THRESHOLD_NORMS = (NormName.L2, NormName.LINF)
REFINEMENT_ORDER = 1.9
DIRICHLET_STRESS_LINF_ORDER = 0.8
AGREEMENT_TOLERANCE = 0.05


class ErrorAccumulator:
    """
    Running sums of one field's error over the sampled space-time points.
    Each slice is reduced with a fixed numpy reduction before entering the sums.
    """

    def __init__(self):
        self.sum_sq_error = 0.0
        self.sum_sq_exact = 0.0
        self.max_abs_error = 0.0
        self.slices = 0

    def add(self, numeric: np.ndarray, exact: np.ndarray) -> None:
        error = numeric - exact
        self.sum_sq_error += float(np.sum(error * error))
        self.sum_sq_exact += float(np.sum(exact * exact))
        largest = float(np.max(np.abs(error)))
        # NaN never compares greater, so keep it explicitly
        if math.isnan(largest) or largest > self.max_abs_error:
            self.max_abs_error = largest
        self.slices += 1

    def norms(self, dx: float, dt: float) -> FieldErrorNorms:
        """
        :param dx: grid spacing
        :param dt: time weight of one sampled slice
        """
        if self.slices == 0:
            return FieldErrorNorms.undefined()
        weight = dx * dx * dt
        l2 = math.sqrt(weight * self.sum_sq_error)
        l2_exact = math.sqrt(weight * self.sum_sq_exact)
        if l2_exact > 0.0:
            l2_rel, linf_rel = l2 / l2_exact, self.max_abs_error / l2_exact
        else:
            l2_rel = linf_rel = math.nan
        return FieldErrorNorms(L2=l2, Linf=self.max_abs_error, L2rel=l2_rel, Linfrel=linf_rel)


def spatial_error(numeric: np.ndarray, exact: np.ndarray, dx: float) -> float:
    """L2 error integrated in space only, relative to the same-slice exact norm"""
    error = numeric - exact
    l2 = math.sqrt(dx * dx * float(np.sum(error * error)))
    l2_exact = math.sqrt(dx * dx * float(np.sum(exact * exact)))
    if l2_exact == 0.0:
        return 0.0 if l2 == 0.0 else math.inf
    return l2 / l2_exact


class RunErrorTracker:
    """
    Compares derived fields of one run with the exact solution of its case.

    Slices at steps divisible by `error_stride` enter the space-time norms;
    each of them carries the time weight error_stride * dt.
    """

    def __init__(self, lattice: Lattice, case: ManufacturedCase, material: Material, error_stride: int = 1):
        if not case.exact:
            raise ConfigError(f"case {case.name.value} has no exact solution to compare with")
        self.lattice = lattice
        self.case = case
        self.material = material
        self.error_stride = max(1, int(error_stride))
        self.displacement = ErrorAccumulator()
        self.stress = ErrorAccumulator()

    def exact(self, time: float) -> tuple[np.ndarray, np.ndarray]:
        x, y = self.lattice.open_mesh
        return (
            exact_displacement(self.case, x, y, time, self.material),
            exact_stress(self.case, x, y, time, self.material),
        )

    def _check_shape(self, fields: DerivedFields) -> None:
        if fields.u.shape[1:] != self.lattice.shape:
            raise ConfigError(f"fields of shape {fields.u.shape[1:]} do not live on a {self.lattice.shape} lattice")

    def due(self, step: int) -> bool:
        return step >= 1 and step % self.error_stride == 0

    def add(self, fields: DerivedFields) -> None:
        self._check_shape(fields)
        u_exact, sigma_exact = self.exact(fields.time)
        self.displacement.add(fields.u, u_exact)
        self.stress.add(fields.sigma, sigma_exact)

    def trace_point(self, fields: DerivedFields) -> ErrorTracePoint:
        self._check_shape(fields)
        x, y = self.lattice.open_mesh
        u_exact = exact_displacement(self.case, x, y, fields.time, self.material)
        return ErrorTracePoint(
            step=fields.step,
            time=fields.time,
            l2rel_u=spatial_error(fields.u, u_exact, self.lattice.discretization.dx),
        )

    @property
    def slice_weight(self) -> float:
        return self.error_stride * self.lattice.discretization.dt

    def norms(self) -> tuple[FieldErrorNorms, FieldErrorNorms]:
        dx = self.lattice.discretization.dx
        return (
            self.displacement.norms(dx, self.slice_weight),
            self.stress.norms(dx, self.slice_weight),
        )

    def report(self, steps: int, status: RunStatus = RunStatus.COMPLETED, wall_clock: float = 0.0) -> ErrorReport:
        discretization = self.lattice.discretization
        u_norms, sigma_norms = self.norms()
        return ErrorReport(
            case=self.case.name,
            mode=discretization.mode,
            cK2=self.material.cK2,
            cmu2=self.material.cmu2,
            dx=discretization.dx,
            dt=discretization.dt,
            nx=discretization.nx,
            ny=discretization.ny,
            steps=steps,
            slices=self.displacement.slices,
            error_stride=self.error_stride,
            status=status,
            wall_clock=wall_clock,
            u=u_norms,
            sigma=sigma_norms,
        )


def error_norms(
    slices: Iterable[DerivedFields],
    lattice: Lattice,
    case: ManufacturedCase,
    material: Material,
    error_stride: int = 1,
) -> ErrorReport:
    """
    Space-time error norms of recorded slices against the exact solution.
    Slices at step 0 or off the stride are skipped.
    """
    tracker = RunErrorTracker(lattice, case, material, error_stride)
    steps = 0
    for fields in slices:
        steps = max(steps, fields.step)
        if tracker.due(fields.step):
            tracker.add(fields)
    return tracker.report(steps=steps)


def spatial_error_trace(
    slices: Iterable[DerivedFields],
    lattice: Lattice,
    case: ManufacturedCase,
    material: Material,
) -> list[ErrorTracePoint]:
    tracker = RunErrorTracker(lattice, case, material)
    return [tracker.trace_point(fields) for fields in slices]


def observed_order(e_coarse: float, e_fine: float, dx_coarse: float, dx_fine: float) -> Optional[float]:
    """
    log(e_coarse / e_fine) / log(dx_coarse / dx_fine); inf when the fine error vanishes.
    """
    if not (math.isfinite(e_coarse) and math.isfinite(e_fine)):
        return None
    if e_fine == 0.0:
        return math.inf
    if e_coarse <= 0.0:
        return None
    return math.log(e_coarse / e_fine) / math.log(dx_coarse / dx_fine)


def _level_error(report: ErrorReport, field: FieldName, norm: NormName) -> float:
    if report.status is RunStatus.UNSTABLE:
        return math.nan
    return report.field(field).get(norm)


def order_table(reports: Sequence[ErrorReport]) -> list[OrderRow]:
    """
    One row per (material, level, field, norm); levels run coarse to fine and the
    order compares each level with the previous one.
    """
    by_material: dict[tuple[float, float], list[ErrorReport]] = defaultdict(list)
    for report in reports:
        by_material[(report.cK2, report.cmu2)].append(report)

    rows: list[OrderRow] = []
    for material_reports in by_material.values():
        levels = sorted(material_reports, key=lambda report: report.dx, reverse=True)
        for position, report in enumerate(levels):
            for field in FieldName:
                for norm in NormName:
                    error = _level_error(report, field, norm)
                    order = None
                    if position > 0:
                        coarse = levels[position - 1]
                        order = observed_order(_level_error(coarse, field, norm), error, coarse.dx, report.dx)
                    rows.append(OrderRow(
                        case=report.case.value,
                        mode=report.mode.value,
                        cK2=report.cK2,
                        cmu2=report.cmu2,
                        dx=report.dx,
                        dt=report.dt,
                        field=field.value,
                        norm=norm.value,
                        error=error,
                        observed_order=order,
                    ))
    return rows


def required_orders(mode: BoundaryMode) -> dict[tuple[FieldName, NormName], float]:
    """Minimum order between the two finest levels per (field, norm)"""
    required = {(field, norm): REFINEMENT_ORDER for field in FieldName for norm in THRESHOLD_NORMS}
    if mode is BoundaryMode.DIRICHLET:
        # first-order stress error stays localized at the walls
        required[(FieldName.STRESS, NormName.LINF)] = DIRICHLET_STRESS_LINF_ORDER
    return required


def evaluate_thresholds(rows: Sequence[OrderRow], mode: BoundaryMode) -> list[ThresholdFailure]:
    """
    Check the order of the finest level of every material against the required minimum.
    """
    finest: dict[tuple[float, float], float] = {}
    for row in rows:
        key = (row.cK2, row.cmu2)
        finest[key] = min(finest.get(key, math.inf), row.dx)

    failures = []
    required = required_orders(mode)
    for row in rows:
        if row.dx != finest[(row.cK2, row.cmu2)]:
            continue
        minimum = required.get((FieldName(row.field), NormName(row.norm)))
        if minimum is None:
            continue
        order = row.observed_order
        if order is None or math.isnan(order) or order < minimum:
            failures.append(ThresholdFailure(
                cK2=row.cK2,
                cmu2=row.cmu2,
                field=row.field,
                norm=row.norm,
                observed_order=order,
                required=minimum,
            ))
    return failures


def norm_trace_agreement(
    coarse: Sequence[NormTracePoint],
    fine: Sequence[NormTracePoint],
    dx_coarse: float,
    dx_fine: float,
    tolerance: float = AGREEMENT_TOLERANCE,
) -> NormAgreement:
    """
    Compare two norm traces at their shared times.

    The grid norm sums over nodes, so each trace is scaled by its spacing
    before the pointwise relative difference is taken.
    """
    fine_by_time = {round(point.time, 9): point for point in fine}
    largest = 0.0
    shared = 0
    for point in coarse:
        partner = fine_by_time.get(round(point.time, 9))
        if partner is None:
            continue
        scaled_fine = dx_fine * partner.norm
        scaled_coarse = dx_coarse * point.norm
        if scaled_fine == 0.0:
            difference = 0.0 if scaled_coarse == 0.0 else math.inf
        else:
            difference = abs(scaled_coarse - scaled_fine) / abs(scaled_fine)
        largest = max(largest, difference)
        shared += 1
    return NormAgreement(shared_points=shared, max_relative_difference=largest, tolerance=tolerance)


def default_cut_row(lattice: Lattice) -> int:
    """Row nearest the middle of the domain"""
    middle = 0.5 * lattice.discretization.extents[1]
    return int(np.argmin(np.abs(lattice.y - middle)))


def horizontal_cut(
    fields: DerivedFields,
    lattice: Lattice,
    case: ManufacturedCase,
    material: Material,
    row: Optional[int] = None,
) -> tuple[pd.DataFrame, float]:
    """
    Numerical and exact displacement along one lattice row.
    :return: (table with CUT_COLUMNS, relative L2 error along the row)
    """
    row = default_cut_row(lattice) if row is None else row
    ny = lattice.shape[0]
    if not 0 <= row < ny:
        raise ConfigError(f"cut row {row} outside 0..{ny - 1}")
    x = lattice.x
    y = np.full_like(x, lattice.y[row])
    exact = exact_displacement(case, x, y, fields.time, material)
    numeric = fields.u[:, row, :]
    columns = (material.L * x, material.L * y, numeric[0], numeric[1], exact[0], exact[1])
    frame = pd.DataFrame({name: values for name, values in zip(CUT_COLUMNS, columns)})
    return frame, spatial_error(numeric, exact, lattice.discretization.dx)


class VerificationHandler:
    """Convergence studies on top of the simulation handler"""

    def __init__(self, simulation_handler: "SimulationHandler", concurrency: int = 1):
        self._simulation = simulation_handler
        self._concurrency = max(1, int(concurrency))

    @timer
    def convergence_study(
        self,
        study: StudyConfig,
        initializer: Optional[Callable] = None,
        write_artifacts: bool = True,
    ) -> tuple[StudySummary, list["RunResult"]]:
        """
        Run every (material, level) pair, tabulate orders and check the thresholds.
        Diverged runs are recorded and the study continues.
        """
        configs = study.run_configs()
        for config in configs:
            cfl = cfl_check(config.material, config.c)
            if not cfl.passed:
                raise CFLRejectedError(cfl.margin)

        study_dir = None
        if write_artifacts:
            study_dir = tables.ensure_dir(Path(study.output_dir or self._simulation.output_dir) / study.study_name)
            configs = [config.model_copy(update={"output_dir": str(study_dir)}) for config in configs]

        logger.info(
            f"Convergence study {study.study_name}: {len(study.materials)} materials x "
            f"{len(study.discretizations)} levels, concurrency {self._concurrency}"
        )
        jobs = [
            partial(self._simulation.run, config, initializer=initializer, write_artifacts=write_artifacts)
            for config in configs
        ]
        results = run_concurrently(jobs, limit=self._concurrency)

        diverged = [result.config.run_name for result in results if result.status is RunStatus.UNSTABLE]
        reports = [result.report for result in results if result.report is not None]
        rows = order_table(reports)
        summary = StudySummary(
            case=study.case,
            mode=study.mode,
            rows=rows,
            failures=evaluate_thresholds(rows, study.mode),
            diverged=diverged,
        )
        if study_dir is not None:
            tables.write_order_table(rows, study_dir / "order_table.csv")
            tables.write_json(summary, study_dir / "study_summary.json")
            logger.info(f"Order table written to {study_dir / 'order_table.csv'}")
        return summary, results
