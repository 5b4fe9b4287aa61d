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
"""System file model: the on-disk form of a graph system."""

import logging
import pathlib
from typing import Dict, List, Optional

from pydantic import root_validator, validator

from crossfree.core import const
from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.embedding import EmbeddedGraph
from crossfree.core.err import CrossfreeValidationError, EmbeddingError
from crossfree.core.graph_system import Color, GraphSystem
from crossfree.core.regions import RegionLayout, build_layout

logger = logging.getLogger(__name__)


class SystemFile(CrossfreeBaseModel):
    """
    A graph system as written by hand or by crossfree.

    Either the host is explicit (vertices plus a neighbor rotation per vertex, counterclockwise) together with the
    families and the coloring, or it is the grid shorthand alone.
    """

    format_version: int = const.SYSTEM_FORMAT_VERSION
    vertices: List[str] = []
    rotations: Dict[str, List[str]] = {}
    coloring: Optional[Dict[str, Color]] = None
    H: Dict[str, List[str]] = {}
    K: Optional[Dict[str, List[str]]] = None
    grid: Optional[RegionLayout] = None

    @validator('format_version')
    def _known_version(cls, v):
        if v != const.SYSTEM_FORMAT_VERSION:
            raise ValueError(f'unsupported format version {v}, expected {const.SYSTEM_FORMAT_VERSION}')
        return v

    @root_validator(skip_on_failure=True)
    def _grid_or_explicit(cls, values):
        explicit = values['vertices'] or values['rotations'] or values['H'] or values['K'] is not None
        if values['grid'] is not None:
            if explicit or values['coloring'] is not None:
                raise ValueError('a grid shorthand file carries no vertices, rotations, coloring or families')
            return values
        if set(values['rotations']) != set(values['vertices']):
            raise ValueError('rotations must be given for exactly the listed vertices')
        if len(set(values['vertices'])) != len(values['vertices']):
            raise ValueError('vertices are listed more than once')
        return values

    def to_system(self) -> GraphSystem:
        """
        Build the graph system, checking connectivity of the host and of every member.

        Raises:
            CrossfreeValidationError: a rotation is malformed, or a member or the host is disconnected.
        """
        if self.grid is not None:
            system, _ = build_layout(self.grid)
            return system
        try:
            host = EmbeddedGraph.from_rotation({v: self.rotations[v] for v in self.vertices})
        except EmbeddingError as e:
            raise CrossfreeValidationError(f'Invalid rotations: {e.msg}')
        return GraphSystem(host, self.H, self.K, self.coloring)

    @classmethod
    def from_system(cls, system: GraphSystem) -> 'SystemFile':
        """
        Write a system in canonical explicit form, member vertices in host order.

        Raises:
            CrossfreeValidationError: the host has loops or parallel edges.
        """
        host = system.host
        if not host.is_simple():
            raise CrossfreeValidationError('Only simple host graphs can be written to a system file')

        def listed(family: Dict[str, frozenset]) -> Dict[str, List[str]]:
            return {name: [v for v in host.vertices if v in family[name]] for name in sorted(family)}

        return cls(
            vertices=host.vertices,
            rotations=host.rotation_names(),
            coloring=dict(system.coloring) if system.coloring is not None else None,
            H=listed(system.H),
            K=listed(system.K) if system.K is not None else None
        )

    def expand(self) -> 'SystemFile':
        """Explicit form of a grid shorthand file, explicit files are returned as they are."""
        if self.grid is None:
            return self
        return SystemFile.from_system(self.to_system())


def load_system(path: pathlib.Path) -> GraphSystem:
    """Read a system file and build its graph system."""
    system = SystemFile.read(path).to_system()
    logger.debug(f'Loaded {system} from {path}')
    return system
