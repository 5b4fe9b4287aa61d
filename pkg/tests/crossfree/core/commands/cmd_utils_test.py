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
"""Tests for crossfree.core.commands.cmd_utils module."""

import argparse
import pathlib

import pytest

from crossfree.core import const
from crossfree.core.commands import cmd_utils
from crossfree.core.err import ContractViolation, CrossfreeError, CrossfreeParseError, EmbeddingError
from crossfree.core.err import OracleSizeError, StepBudgetExhausted
from crossfree.core.graph_system import CrossingWitness
from crossfree.core.regions import GridSpec


@pytest.mark.parametrize(
    'error, code',
    [
        (ContractViolation('x'), const.EXIT_CONTRACT_VIOLATION),
        (StepBudgetExhausted('x'), const.EXIT_BUDGET_EXHAUSTED),
        (CrossfreeParseError('x'), const.EXIT_INPUT_ERROR),
        (EmbeddingError('x'), const.EXIT_INPUT_ERROR),
        (OracleSizeError('x'), const.EXIT_INPUT_ERROR),
        (CrossfreeError('x'), const.EXIT_FAILURE)
    ]
)
def test_exit_code(error: CrossfreeError, code: int) -> None:
    """Errors map to their exit codes."""
    assert cmd_utils.exit_code(error) == code


def test_fail_logs_witness(caplog) -> None:
    """Model witnesses are logged in plain form."""
    witness = CrossingWitness(vertex='v', members=('H1', 'H2'), darts=[0, 1, 2, 3], neighbors=['a', 'c', 'b', 'd'])
    assert cmd_utils.fail('dual', ContractViolation('crossing', witness)) == const.EXIT_CONTRACT_VIOLATION
    assert 'dual failed: crossing' in caplog.text
    assert "'vertex': 'v'" in caplog.text


def test_settings_from_args(tmp_path: pathlib.Path) -> None:
    """Flags override the config file."""
    config = tmp_path / 'config.ini'
    config.write_text('[solver]\nk = 1\nseed = 4\n')
    settings = cmd_utils.settings_from_args(argparse.Namespace(config=config, audit=True, k=3, seed=None))
    assert settings.pipeline.audit
    assert settings.solver.k == 3
    assert settings.solver.seed == 4
    defaults = cmd_utils.settings_from_args(argparse.Namespace())
    assert not defaults.pipeline.audit


def test_emit(tmp_path: pathlib.Path) -> None:
    """Reports go to the file the output flag names."""
    target = tmp_path / 'grid.json'
    cmd_utils.emit(GridSpec(rows=2, cols=3), target)
    assert GridSpec.read(target) == GridSpec(rows=2, cols=3)
