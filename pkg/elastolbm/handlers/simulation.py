"""
Single-run orchestration: lattice, CFL gate, initialization, time loop and artifacts
"""
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from elastolbm.exceptions import CFLRejectedError, SymmetrizerError
from elastolbm.handlers.verify import RunErrorTracker
from elastolbm.libs.consts.enums import RunStatus
from elastolbm.libs.decorators.timer import timer
from elastolbm.libs.logger import get_run_logger
from elastolbm.providers.mms import ManufacturedCase, ManufacturedSolutionProvider
from elastolbm.schemas.report import CFLResult, ErrorReport, ErrorTracePoint, NormTracePoint
from elastolbm.schemas.run_config import RunConfig
from elastolbm.serializers import tables
from elastolbm.serializers.manifest import MANIFEST_NAME, write_manifest
from elastolbm.solver.grid import Lattice, build_lattice
from elastolbm.solver.initcond import InitialData, init_populations
from elastolbm.solver.kernel import LatticeBoltzmannSolver
from elastolbm.solver.postprocess import DerivedFields, snapshot
from elastolbm.solver.stabmon import NormMonitor, Symmetrizer, build_symmetrizer, cfl_check

Initializer = Callable[..., np.ndarray]


@dataclass(eq=False)
class RunResult:
    """Outcome of one run; `final_fields` is None when nothing finite was left to report"""
    config: RunConfig
    lattice: Lattice
    case: ManufacturedCase
    cfl: CFLResult
    status: RunStatus
    steps: int
    divergence_step: Optional[int] = None
    report: Optional[ErrorReport] = None
    norm_trace: list[NormTracePoint] = field(default_factory=list)
    error_trace: list[ErrorTracePoint] = field(default_factory=list)
    final_fields: Optional[DerivedFields] = None
    run_dir: Optional[Path] = None
    artifacts: list[Path] = field(default_factory=list)
    wall_clock: float = 0.0

    @property
    def diverged(self) -> bool:
        return self.status is RunStatus.UNSTABLE

    @property
    def max_drift(self) -> float:
        return max((point.relative_drift for point in self.norm_trace), default=0.0)


class SimulationHandler:
    """Simulation handler"""

    def __init__(
        self,
        mms_provider: ManufacturedSolutionProvider,
        output_dir: str = "runs",
        workers: int = 1,
        divergence_factor: float = 1e6,
        extent_tolerance: float = 1e-12,
        code_version: str = "v0.1.0",
    ):
        self._mms = mms_provider
        self.output_dir = output_dir
        self.workers = max(1, int(workers))
        self.divergence_factor = divergence_factor
        self.extent_tolerance = extent_tolerance
        self.code_version = code_version

    def build(self, config: RunConfig) -> tuple[Lattice, CFLResult, Optional[Symmetrizer]]:
        """
        Lattice, CFL gate and symmetrizer of a run.
        Raises CFLRejectedError when the CFL condition fails without override.
        """
        lattice = build_lattice(
            extents=config.extents,
            dx=config.dx,
            dt=config.dt,
            mode=config.mode,
            t_final=config.t_final,
            tolerance=self.extent_tolerance,
        )
        material = config.material
        cfl = cfl_check(material, lattice.discretization.c)
        if not cfl.passed and not config.cfl_override:
            raise CFLRejectedError(cfl.margin)
        try:
            symmetrizer = build_symmetrizer(material, lattice.discretization.c, lattice.velocities)
        except SymmetrizerError:
            if not config.cfl_override:
                raise
            symmetrizer = None
        return lattice, cfl, symmetrizer

    def initial_state(
        self,
        config: RunConfig,
        lattice: Lattice,
        case: ManufacturedCase,
        initializer: Optional[Initializer] = None,
    ) -> tuple[np.ndarray, np.ndarray]:
        """Populations and dimensional displacement at t = 0"""
        material = config.material
        X, Y = lattice.mesh
        data: InitialData = self._mms.initial_data(case, X, Y, material)
        initializer = initializer or init_populations
        populations = initializer(data, lattice.discretization.c, lattice.discretization.dt, material, lattice.velocities)
        return populations, self._mms.initial_displacement(case, X, Y, material)

    @timer
    def run(
        self,
        config: RunConfig,
        initializer: Optional[Initializer] = None,
        write_artifacts: bool = True,
        command: Optional[str] = None,
        workers: Optional[int] = None,
    ) -> RunResult:
        """
        Run one configuration to t_final or to divergence.
        :param config:
        :param initializer: replaces the population initialization, e.g. for regression checks
        :param write_artifacts: write manifest, snapshots, traces and the error report
        :param command: invoking command line echoed into the manifest
        :param workers: overrides the handler's worker count
        :return:
        """
        started = time.perf_counter()
        run_logger = get_run_logger(config.run_name)
        case = self._mms.get_case(config.case)
        material = config.material
        lattice, cfl, symmetrizer = self.build(config)
        discretization = lattice.discretization
        n_steps = discretization.n_steps
        run_logger.info(
            f"Run {config.run_name}: {discretization.nx}x{discretization.ny} nodes, {n_steps} steps, "
            f"c={discretization.c:.6g}, CFL margin {cfl.margin:.6g}"
        )

        run_dir = None
        artifacts: list[Path] = []
        if write_artifacts:
            run_dir = tables.ensure_dir(Path(config.output_dir or self.output_dir) / config.run_name)
            artifacts.append(write_manifest(run_dir / MANIFEST_NAME, config.to_flat(), self.code_version, command))

        monitor = NormMonitor(symmetrizer, discretization.dt, config.norm_stride, self.divergence_factor)
        tracker = None
        if case.exact:
            tracker = RunErrorTracker(lattice, case, material, config.error_stride)
        error_trace: list[ErrorTracePoint] = []
        status = RunStatus.COMPLETED
        divergence_step: Optional[int] = None
        last_finite: Optional[DerivedFields] = None

        def _snapshot(fields: DerivedFields) -> None:
            if run_dir is not None:
                path = tables.snapshot_path(run_dir, fields.step)
                artifacts.append(tables.write_table(snapshot(fields, lattice, material), path))

        def _visit(fields: DerivedFields) -> bool:
            """Record one slice; False when the fields stopped being finite"""
            nonlocal last_finite
            if not fields.is_finite():
                return False
            last_finite = fields
            if tracker is not None:
                if tracker.due(fields.step):
                    tracker.add(fields)
                if fields.step % config.norm_stride == 0:
                    error_trace.append(tracker.trace_point(fields))
            if config.snapshot_stride and fields.step % config.snapshot_stride == 0:
                _snapshot(fields)
            return True

        populations, u0 = self.initial_state(config, lattice, case, initializer)
        with LatticeBoltzmannSolver(
            lattice=lattice,
            material=material,
            sources=self._mms.sources(case, material),
            omega=config.omega,
            workers=workers or self.workers,
            cfl_passed=cfl.passed,
        ) as solver:
            initial = solver.initialize(populations, u0)
            _visit(initial)
            monitor.record(0, solver.populations)

            for m in range(n_steps):
                fields = solver.step()
                if fields.step > 0 and not _visit(fields):
                    status, divergence_step = RunStatus.UNSTABLE, fields.step
                    break
                if monitor.due(m + 1):
                    point = monitor.record(m + 1, solver.populations)
                    if monitor.diverged(point):
                        status, divergence_step = RunStatus.UNSTABLE, m + 1
                        break
            else:
                final = solver.observe()
                if not _visit(final):
                    status, divergence_step = RunStatus.UNSTABLE, final.step
            steps_done = solver.step_index

        if status is RunStatus.UNSTABLE:
            run_logger.error(f"Run {config.run_name} diverged at step {divergence_step}")
        if last_finite is not None and run_dir is not None:
            if not (config.snapshot_stride and last_finite.step % config.snapshot_stride == 0):
                _snapshot(last_finite)

        wall_clock = time.perf_counter() - started
        report = tracker.report(steps_done, status, wall_clock) if tracker is not None else None
        if run_dir is not None:
            artifacts.append(tables.write_norm_trace(monitor.trace, run_dir / "norm_trace.csv"))
            if tracker is not None:
                artifacts.append(tables.write_error_trace(error_trace, run_dir / "error_trace.csv"))
                artifacts.append(tables.write_json(report, run_dir / "error_report.json"))
            run_logger.info(f"Artifacts written to {run_dir}")

        if status is RunStatus.COMPLETED:
            run_logger.info(
                f"Run {config.run_name} completed in {wall_clock:.2f}s; max norm drift {monitor.max_drift:.3e}"
            )
        return RunResult(
            config=config,
            lattice=lattice,
            case=case,
            cfl=cfl,
            status=status,
            steps=steps_done,
            divergence_step=divergence_step,
            report=report,
            norm_trace=list(monitor.trace),
            error_trace=error_trace,
            final_fields=last_finite,
            run_dir=run_dir,
            artifacts=artifacts,
            wall_clock=wall_clock,
        )
