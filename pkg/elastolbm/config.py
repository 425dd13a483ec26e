"""
Configuration
"""
import os
from functools import lru_cache
from typing import Any, Optional, Type, Tuple

from dotenv import load_dotenv
from pydantic import model_validator
from pydantic.fields import FieldInfo
from pydantic_settings import BaseSettings, EnvSettingsSource, PydanticBaseSettingsSource

from elastolbm.libs.shared import Converter

load_dotenv()


class CustomSource(EnvSettingsSource):

    def prepare_field_value(
        self,
        field_name: str,
        field: FieldInfo,
        value: Any,
        value_is_complex: bool
    ) -> Any:
        """
        Prepare field value for custom source.
        :param field_name:
        :param field:
        :param value:
        :param value_is_complex:
        :return:
        """
        if value is None:
            return value
        if field.annotation is bool:
            return Converter.to_bool(value, default=field.default or False)
        if field.annotation is float:
            return Converter.to_float(value, default=field.default)
        return value


class Configuration(BaseSettings):
    """
    Configuration
    """

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings, CustomSource(settings_cls))

    # [App Base]
    APP_NAME: str = "elastolbm"
    ENV: str = os.getenv(key="ENV", default="dev").lower()
    APP_VERSION: str = os.getenv(key="VERSION", default="v0.1.0")

    # [Logging]
    # overrides the ENV based level when set, e.g. WARNING for quiet sweeps
    LOG_LEVEL: Optional[str] = os.getenv(key="LOG_LEVEL")

    # [Output]
    OUTPUT_DIR: str = os.getenv(key="OUTPUT_DIR", default="runs")

    # [Solver]
    # worker threads for node-local phases; results do not depend on it
    WORKERS: int = int(os.getenv(key="WORKERS", default="1"))
    DIVERGENCE_FACTOR: float = float(os.getenv(key="DIVERGENCE_FACTOR", default="1e6"))
    EXTENT_TOLERANCE: float = float(os.getenv(key="EXTENT_TOLERANCE", default="1e-12"))

    # [Study]
    STUDY_CONCURRENCY: int = int(os.getenv(key="STUDY_CONCURRENCY", default="1"))

    @model_validator(mode="after")
    def _check_positive_counts(self) -> "Configuration":
        """
        Worker counts are at least one.
        """
        self.WORKERS = max(1, self.WORKERS)
        self.STUDY_CONCURRENCY = max(1, self.STUDY_CONCURRENCY)
        return self


@lru_cache()
def get_settings() -> Configuration:
    return Configuration()


settings: Configuration = get_settings()
