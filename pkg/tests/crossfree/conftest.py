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
"""Common fixtures."""

import os
import pathlib

import pytest

from tests import test_utils

from crossfree.core.graph_system import GraphSystem


@pytest.fixture(scope='function')
def tmp_empty_cwd(tmp_path: pathlib.Path) -> pathlib.Path:
    """Create a temporary directory and cd into that directory, returning to the original one afterwards."""
    pytest_cwd = pathlib.Path.cwd()
    os.chdir(tmp_path)

    yield tmp_path

    os.chdir(pytest_cwd)


@pytest.fixture(scope='module')
def yaml_testdata_path() -> pathlib.Path:
    """Return the path of the yaml test data."""
    return test_utils.YAML_TEST_DATA_PATH


@pytest.fixture(scope='function')
def fig2_system() -> GraphSystem:
    """Incidence example, all vertices blue."""
    return test_utils.load_fixture(test_utils.FIG2_SYSTEM)


@pytest.fixture(scope='function')
def fig2_intersection() -> GraphSystem:
    """Intersection example with K1, K2 and K3."""
    return test_utils.load_fixture(test_utils.FIG2_INTERSECTION)


@pytest.fixture(scope='function')
def torus_cycles() -> GraphSystem:
    """All row and column cycles of the 3x3 torus grid."""
    return test_utils.load_fixture(test_utils.TORUS_CYCLES)


@pytest.fixture(scope='function')
def star() -> GraphSystem:
    """K_{1,4} with H1 on leaves a, b and H2 on leaves c, d."""
    return test_utils.load_fixture(test_utils.STAR)
