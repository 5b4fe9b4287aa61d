# -*- mode:python; coding:utf-8 -*-

# Copyright (c) 2020 IBM Corp. All rights reserved.
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
"""Configuration loading from config.ini files."""
import configparser
import logging
import pathlib
from typing import Optional

from pkg_resources import resource_filename

from pydantic import Field, PositiveInt

import crossfree.core.const as const
from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.err import CrossfreeNotFoundError, CrossfreeValidationError

logger = logging.getLogger(__name__)


class PipelineSettings(CrossfreeBaseModel):
    """Settings of the support construction pipelines."""

    step_budget: PositiveInt = Field(1000000, description='Rewrite steps allowed per construction')
    audit: bool = Field(False, description='Re-verify cross-freeness and genus after every rewrite')


class SolverSettings(CrossfreeBaseModel):
    """Settings of the local-search solver."""

    k: PositiveInt = 2
    max_iterations: PositiveInt = 10000
    seed: int = 0


class OracleSettings(CrossfreeBaseModel):
    """Size guards of the exhaustive oracles."""

    max_support_elements: PositiveInt = 8
    max_solver_elements: PositiveInt = 14
    max_rotation_systems: PositiveInt = 2000000


class CrossfreeConfig(CrossfreeBaseModel):
    """Complete crossfree configuration."""

    pipeline: PipelineSettings = PipelineSettings()
    solver: SolverSettings = SolverSettings()
    oracle: OracleSettings = OracleSettings()


def default_config_path() -> pathlib.Path:
    """Return the path of the packaged config.ini."""
    return pathlib.Path(resource_filename(const.PACKAGE_RESOURCES, const.CROSSFREE_CONFIG_FILE))


def load_config(path: Optional[pathlib.Path] = None) -> CrossfreeConfig:
    """
    Load a configuration file.

    Args:
        path: config.ini to read, the packaged defaults are used when omitted.

    Returns:
        The configuration, with defaults for every key the file does not set.

    Raises:
        CrossfreeNotFoundError: The file does not exist.
        CrossfreeValidationError: A value cannot be parsed or is out of range.
    """
    config_path = pathlib.Path(path) if path else default_config_path()
    if not config_path.exists():
        raise CrossfreeNotFoundError(f'Config file at {config_path} does not exist.')
    parser = configparser.ConfigParser()
    with config_path.open('r', encoding=const.FILE_ENCODING) as config_file:
        parser.read_file(config_file)
    for section in ('pipeline', 'solver', 'oracle'):
        if not parser.has_section(section):
            logger.debug(f'Config file {config_path} has no [{section}] section, using defaults.')
            parser.add_section(section)
    defaults = CrossfreeConfig()
    pipeline = parser['pipeline']
    solver = parser['solver']
    oracle = parser['oracle']
    try:
        config = CrossfreeConfig(
            pipeline=PipelineSettings(
                step_budget=pipeline.getint('step_budget', fallback=defaults.pipeline.step_budget),
                audit=pipeline.getboolean('audit', fallback=defaults.pipeline.audit)
            ),
            solver=SolverSettings(
                k=solver.getint('k', fallback=defaults.solver.k),
                max_iterations=solver.getint('max_iterations', fallback=defaults.solver.max_iterations),
                seed=solver.getint('seed', fallback=defaults.solver.seed)
            ),
            oracle=OracleSettings(
                max_support_elements=oracle.getint(
                    'max_support_elements', fallback=defaults.oracle.max_support_elements
                ),
                max_solver_elements=oracle.getint('max_solver_elements', fallback=defaults.oracle.max_solver_elements),
                max_rotation_systems=oracle.getint(
                    'max_rotation_systems', fallback=defaults.oracle.max_rotation_systems
                )
            )
        )
    except ValueError as e:
        raise CrossfreeValidationError(f'Invalid value in {config_path}: {e}')
    logger.debug(f'Loaded configuration from {config_path}')
    return config
