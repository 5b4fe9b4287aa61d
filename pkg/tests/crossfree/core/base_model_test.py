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
"""Tests for crossfree.core.base_model module."""

import pathlib

import pytest

import crossfree.core.err as err
from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.models.file_content_type import FileContentType
from crossfree.core.regions import GridSpec, Topology
from crossfree.core.verify import Hypergraph


def simple_hypergraph() -> Hypergraph:
    """Return a two element hypergraph."""
    return Hypergraph(ground=['a', 'b'], edges={'X': ['a', 'b']})


def test_is_crossfree_base() -> None:
    """Test that the typing information is as expected."""
    assert isinstance(simple_hypergraph(), CrossfreeBaseModel)


def test_extra_fields_forbidden() -> None:
    """Unknown keys are rejected."""
    with pytest.raises(ValueError):
        GridSpec(rows=2, cols=2, depth=3)


def test_assignment_is_validated() -> None:
    """Assignments go through validation."""
    grid = GridSpec(rows=2, cols=2)
    with pytest.raises(ValueError):
        grid.rows = -1


def test_to_plain_drops_none() -> None:
    """None values are left out of plain dictionaries."""
    assert simple_hypergraph().to_plain() == {'ground': ['a', 'b'], 'edges': {'X': ['a', 'b']}}


def test_write_and_read(tmp_path: pathlib.Path) -> None:
    """Models are written and read back as yaml and json."""
    grid = GridSpec(rows=3, cols=4, topology=Topology.torus)
    for suffix in ('.yaml', '.json'):
        target = tmp_path / f'grid{suffix}'
        grid.write(target)
        assert GridSpec.read(target) == grid
    with pytest.raises(err.CrossfreeError):
        grid.write(tmp_path / 'grid.txt')
    with pytest.raises(err.CrossfreeError):
        grid.dumps(FileContentType.DOT)


def test_read_missing(tmp_path: pathlib.Path) -> None:
    """Missing files are reported as such."""
    with pytest.raises(err.CrossfreeNotFoundError):
        GridSpec.read(tmp_path / 'absent.yaml')


def test_parse_errors_cite_location() -> None:
    """Malformed text and schema errors name their line or field."""
    with pytest.raises(err.CrossfreeParseError) as wrapped:
        GridSpec.parse_text('rows: 3\ncols: [4\n', FileContentType.YAML)
    assert wrapped.value.location.startswith('line')
    with pytest.raises(err.CrossfreeParseError) as wrapped:
        GridSpec.parse_text('{"rows": 3,', FileContentType.JSON)
    assert wrapped.value.location.startswith('line')
    with pytest.raises(err.CrossfreeParseError) as wrapped:
        GridSpec.parse_text('rows: 3\ncols: many\n', FileContentType.YAML)
    assert wrapped.value.location == 'cols'
    with pytest.raises(err.CrossfreeParseError):
        GridSpec.parse_text('- 3\n- 4\n', FileContentType.YAML)
    with pytest.raises(err.CrossfreeParseError):
        GridSpec.parse_text('rows: 3', FileContentType.DOT)


def test_content_types() -> None:
    """Extensions map to content types, case-insensitively by path."""
    assert FileContentType.path_to_content_type(pathlib.Path('a/b.YML')) == FileContentType.YAML
    assert FileContentType.to_content_type('.gv') == FileContentType.DOT
    with pytest.raises(err.CrossfreeError):
        FileContentType.to_content_type('.xml')
