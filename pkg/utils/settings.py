# Copyright (c) 2025-2026.
#
# This file is part of Chipfire Gonality.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from functools import lru_cache
from typing import Literal

from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
    TomlConfigSettingsSource,
)


class Settings(BaseSettings):
    """
    Settings for the toolkit.

    Read from chipfire.toml in the working directory when present. The
    environment is not a settings source.
    """

    model_config = SettingsConfigDict(
        toml_file="chipfire.toml",
        case_sensitive=True,
        validate_assignment=True,
    )

    BASE_VERTEX: int = 0
    TREEWIDTH_MAX_VERTICES: int = 14
    SUITE_MAX_VERTICES: int = 6
    RANK_MAX_DEGREE: int = 12
    WORKERS: int = 1
    LOG_LEVEL: str = "WARNING"
    OUTPUT_FORMAT: Literal["text", "json"] = "text"

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings, TomlConfigSettingsSource(settings_cls))


@lru_cache
def get_settings() -> Settings:
    """
    Get the settings for the toolkit.
    """

    return Settings()
