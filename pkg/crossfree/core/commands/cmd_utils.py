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
"""Crossfree command related utilities."""
import argparse
import logging
import pathlib
from typing import Optional

from ilcli import Command  # type: ignore

from crossfree.core import const
from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.config import CrossfreeConfig, load_config
from crossfree.core.err import ContractViolation, CrossfreeError, CrossfreeNotFoundError, CrossfreeParseError
from crossfree.core.err import CrossfreeValidationError, EmbeddingError, InfeasibleInstanceError, OracleSizeError
from crossfree.core.err import StepBudgetExhausted
from crossfree.core.graph_system import GraphSystem
from crossfree.core.models.system_file import load_system

logger = logging.getLogger(__name__)

_INPUT_ERRORS = (
    CrossfreeParseError,
    CrossfreeValidationError,
    CrossfreeNotFoundError,
    EmbeddingError,
    InfeasibleInstanceError,
    OracleSizeError
)


def exit_code(error: CrossfreeError) -> int:
    """Exit code of a command that failed with an error."""
    if isinstance(error, ContractViolation):
        return const.EXIT_CONTRACT_VIOLATION
    if isinstance(error, StepBudgetExhausted):
        return const.EXIT_BUDGET_EXHAUSTED
    if isinstance(error, _INPUT_ERRORS):
        return const.EXIT_INPUT_ERROR
    return const.EXIT_FAILURE


def fail(command: str, error: CrossfreeError) -> int:
    """Log a command failure and return its exit code."""
    logger.debug(f'{command} failed with {type(error).__name__}')
    witness = getattr(error, 'witness', None)
    if isinstance(witness, CrossfreeBaseModel):
        logger.error(f'{command} failed: {error}, witness {witness.to_plain()}')
    else:
        logger.error(f'{command} failed: {error}')
    return exit_code(error)


def add_file_argument(cmd: Command, what: str) -> None:
    """The required system file argument."""
    cmd.add_argument(
        f'-{const.ARG_FILE_SHORT}', f'--{const.ARG_FILE}', help=f'{const.ARG_DESC_FILE} {what}.', type=pathlib.Path,
        required=True
    )


def add_output_arguments(cmd: Command) -> None:
    """The report output and config arguments shared by every command."""
    cmd.add_argument(
        f'-{const.ARG_OUTPUT_SHORT}', f'--{const.ARG_OUTPUT}', help=const.ARG_DESC_OUTPUT, type=pathlib.Path
    )
    cmd.add_argument(
        f'-{const.ARG_CONFIG_SHORT}', f'--{const.ARG_CONFIG}', help=const.ARG_DESC_CONFIG, type=pathlib.Path
    )


def settings_from_args(args: argparse.Namespace) -> CrossfreeConfig:
    """Load the configuration named by -c and apply the flag overrides."""
    config = load_config(getattr(args, const.ARG_CONFIG, None))
    if getattr(args, 'audit', False):
        config.pipeline.audit = True
    if getattr(args, 'k', None) is not None:
        config.solver.k = args.k
    if getattr(args, const.ARG_SEED, None) is not None:
        config.solver.seed = args.seed
    return config


def read_system(args: argparse.Namespace) -> GraphSystem:
    """Load the system file given with -f."""
    return load_system(getattr(args, const.ARG_FILE))


def emit(report: CrossfreeBaseModel, output: Optional[pathlib.Path]) -> None:
    """Write a report to the output file, or print it as yaml."""
    if output is None:
        logger.info(report.dumps().rstrip('\n'))
        return
    report.write(output)
    logger.info(f'Wrote {type(report).__name__} to {output}')
