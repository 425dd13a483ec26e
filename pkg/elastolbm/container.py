"""
Container
"""

from dependency_injector import containers, providers

from elastolbm.config import settings
from elastolbm.handlers import SimulationHandler, StabilityHandler, VerificationHandler
from elastolbm.providers.mms import ManufacturedSolutionProvider


# pylint: disable=too-few-public-methods,c-extension-no-member
class Container(containers.DeclarativeContainer):
    """Container"""

    # [App Base]
    config = providers.Configuration()
    config.from_pydantic(settings)

    # [Providers]
    mms_provider = providers.Singleton(ManufacturedSolutionProvider)

    # [Handlers]
    simulation_handler = providers.Factory(
        SimulationHandler,
        mms_provider=mms_provider,
        output_dir=config.OUTPUT_DIR,
        workers=config.WORKERS,
        divergence_factor=config.DIVERGENCE_FACTOR,
        extent_tolerance=config.EXTENT_TOLERANCE,
        code_version=config.APP_VERSION,
    )
    verification_handler = providers.Factory(
        VerificationHandler,
        simulation_handler=simulation_handler,
        concurrency=config.STUDY_CONCURRENCY,
    )
    stability_handler = providers.Factory(
        StabilityHandler,
        simulation_handler=simulation_handler,
    )
