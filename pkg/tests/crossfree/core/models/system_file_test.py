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
"""Tests for crossfree.core.models.system_file module."""

import pathlib

import pytest

from crossfree.core.embedding import EmbeddedGraph, subdivide_edge
from crossfree.core.err import CrossfreeParseError, CrossfreeValidationError
from crossfree.core.graph_system import Color, GraphSystem
from crossfree.core.models.file_content_type import FileContentType
from crossfree.core.models.system_file import SystemFile, load_system

from tests import test_utils

STAR_TEXT = """
format_version: 1
vertices: [v, a, b]
rotations: {v: [a, b], a: [v], b: [v]}
H: {H1: [v, a]}
"""


def test_load_explicit(fig2_system: GraphSystem) -> None:
    """Explicit files carry the host, families and coloring."""
    assert fig2_system.host.vertices == ['a', 'b', 'c', 'd', 'e', 'f']
    assert fig2_system.host.num_edges == 6
    assert sorted(fig2_system.H) == ['H1', 'H2', 'H3', 'H4']
    assert fig2_system.K is None
    assert fig2_system.coloring['a'] == Color.blue


def test_load_grid_shorthand(torus_cycles: GraphSystem) -> None:
    """Grid files are built from their regions."""
    assert torus_cycles.host.num_vertices == 9
    assert torus_cycles.H['row1'] == frozenset({'r1c0', 'r1c1', 'r1c2'})


def test_load_errors() -> None:
    """Malformed, inconsistent and disconnected inputs are rejected."""
    with pytest.raises(CrossfreeParseError):
        test_utils.load_fixture('malformed.yaml')
    with pytest.raises(CrossfreeValidationError):
        test_utils.load_fixture('bad_rotation.yaml')
    with pytest.raises(CrossfreeValidationError):
        test_utils.load_fixture('disconnected_member.yaml')


@pytest.mark.parametrize(
    'text',
    [
        STAR_TEXT.replace('format_version: 1', 'format_version: 2'),
        STAR_TEXT.replace('vertices: [v, a, b]', 'vertices: [v, a]'),
        STAR_TEXT.replace('vertices: [v, a, b]', 'vertices: [v, a, b, b]'),
        STAR_TEXT + 'grid: {grid: {rows: 2, cols: 2}}\n',
        STAR_TEXT + 'extra: 1\n'
    ]
)
def test_schema_errors(text: str) -> None:
    """Files that do not match the schema fail to parse."""
    with pytest.raises(CrossfreeParseError):
        SystemFile.parse_text(text, FileContentType.YAML)


def test_from_system_lists_members_in_host_order(fig2_system: GraphSystem) -> None:
    """Written systems read back to the same system."""
    written = SystemFile.from_system(fig2_system)
    assert written.H['H3'] == ['a', 'b', 'e', 'f']
    assert written.rotations['b'] == ['c', 'f', 'a']
    again = written.to_system()
    assert again.H == fig2_system.H
    assert again.host.rotation_names() == fig2_system.host.rotation_names()


def test_from_system_needs_simple_host() -> None:
    """Multigraph hosts cannot be written."""
    host = EmbeddedGraph({'a': [0, 2], 'b': [1, 3]}, {0: 1, 1: 0, 2: 3, 3: 2})
    with pytest.raises(CrossfreeValidationError):
        SystemFile.from_system(GraphSystem(host, {'H1': ['a']}))


def test_subdivided_host_is_written() -> None:
    """Subdividing vertex names survive the trip to disk."""
    host, middle = subdivide_edge(test_utils.path(2), test_utils.path(2).find_dart('p0', 'p1'))
    written = SystemFile.from_system(GraphSystem(host, {'H1': ['p0', middle]}))
    assert middle in written.vertices


def test_expand(tmp_path: pathlib.Path) -> None:
    """Grid shorthand expands to the explicit form and explicit files stay as they are."""
    shorthand = SystemFile.read(test_utils.fixture_path(test_utils.TORUS_CYCLES))
    explicit = shorthand.expand()
    assert explicit.grid is None
    assert len(explicit.vertices) == 9
    assert explicit.rotations['r0c0'] == ['r2c0', 'r0c1', 'r1c0', 'r0c2']
    assert explicit.expand() is explicit
    target = tmp_path / 'torus.json'
    explicit.write(target)
    assert load_system(target).H == shorthand.to_system().H
