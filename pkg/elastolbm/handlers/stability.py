"""
Long-horizon runs, refinement comparison of norm traces and collision-algebra checks
"""
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from elastolbm.exceptions import SymmetrizerError
from elastolbm.handlers.simulation import RunResult, SimulationHandler
from elastolbm.handlers.verify import horizontal_cut, norm_trace_agreement
from elastolbm.libs.logger import logger
from elastolbm.schemas.material import Material
from elastolbm.schemas.report import AlgebraCheck, AlgebraReport, NormAgreement
from elastolbm.schemas.run_config import RunConfig
from elastolbm.serializers import tables
from elastolbm.solver.stabmon import algebra_checks, cfl_check

# (cK2, cmu2) pairs covered by `check` when none are given
DEFAULT_CHECK_MATERIALS: tuple[tuple[float, float], ...] = (
    (1.5, 0.0),
    (1.4, 0.1),
    (1.1, 0.4),
    (0.75, 0.75),
    (1.0, 0.2),
)
DEFAULT_CHECK_SPEED = 2.5


@dataclass(eq=False)
class StabilityOutcome:
    result: RunResult
    cut_l2rel: Optional[float] = None
    refined: Optional[RunResult] = None
    agreement: Optional[NormAgreement] = None


def refined_config(config: RunConfig, factor: int = 2) -> RunConfig:
    """Same run on a lattice refined by `factor` in space and time; trace strides keep their times"""
    return config.model_copy(update={
        "name": f"{config.run_name}_refined",
        "dx": config.dx / factor,
        "dt": config.dt / factor,
        "norm_stride": config.norm_stride * factor,
        "error_stride": config.error_stride * factor,
        "snapshot_stride": config.snapshot_stride * factor,
        "cut_row": None,
    })


class StabilityHandler:
    """Stability handler"""

    def __init__(self, simulation_handler: SimulationHandler):
        self._simulation = simulation_handler

    def _with_cut(self, result: RunResult) -> Optional[float]:
        if not result.case.exact or result.final_fields is None:
            return None
        fields = result.final_fields
        frame, l2rel = horizontal_cut(
            fields, result.lattice, result.case, result.config.material, result.config.cut_row
        )
        if result.run_dir is not None:
            path = tables.write_cut(frame, result.run_dir / f"cut_{fields.step}.csv")
            result.artifacts.append(path)
        logger.info(f"Horizontal cut at step {fields.step}: L2rel {l2rel:.3e}")
        return l2rel

    def long_run(
        self,
        config: RunConfig,
        refine: bool = False,
        command: Optional[str] = None,
        workers: Optional[int] = None,
    ) -> StabilityOutcome:
        """
        Run to t_final with norm and error traces; optionally repeat on the refined
        lattice and compare the two norm traces.
        """
        result = self._simulation.run(config, command=command, workers=workers)
        outcome = StabilityOutcome(result=result, cut_l2rel=self._with_cut(result))
        if refine:
            twin = refined_config(config)
            outcome.refined = self._simulation.run(twin, command=command, workers=workers)
            outcome.agreement = norm_trace_agreement(
                result.norm_trace,
                outcome.refined.norm_trace,
                dx_coarse=config.dx,
                dx_fine=twin.dx,
            )
            logger.info(
                f"Norm traces agree within {outcome.agreement.max_relative_difference:.3e} "
                f"over {outcome.agreement.shared_points} shared times"
            )
        return outcome

    def check(
        self,
        materials: Sequence[tuple[float, float]] = DEFAULT_CHECK_MATERIALS,
        c: float = DEFAULT_CHECK_SPEED,
        omega: float = 2.0,
    ) -> list[AlgebraReport]:
        """
        Algebra checks for each material; a missing symmetrizer shows up as a failed check.
        """
        reports = []
        for cK2, cmu2 in materials:
            material = Material(cK2=cK2, cmu2=cmu2)
            try:
                report = algebra_checks(material, c, omega)
            except SymmetrizerError as exc:
                logger.warning(f"{material.label()}: {exc}")
                report = AlgebraReport(
                    cK2=cK2,
                    cmu2=cmu2,
                    c=c,
                    omega=omega,
                    cfl=cfl_check(material, c),
                    checks=[AlgebraCheck(name="k_ij positive definite", value=math.inf, tolerance=0.0)],
                )
            reports.append(report)
        return reports
