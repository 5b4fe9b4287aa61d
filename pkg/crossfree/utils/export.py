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
"""Graphviz DOT text export of embedded graphs, for rendering with external tools."""

import logging
import pathlib
from typing import Dict, List, Mapping, Optional

from crossfree.core import const
from crossfree.core.embedding import EmbeddedGraph
from crossfree.core.err import CrossfreeError
from crossfree.core.graph_system import Color
from crossfree.core.models.file_content_type import FileContentType

logger = logging.getLogger(__name__)


def _quote(text: str) -> str:
    escaped = text.replace('"', '\\"')
    return f'"{escaped}"'


def _attributes(attributes: Mapping[str, str]) -> str:
    if not attributes:
        return ''
    body = ', '.join(f'{key}={_quote(value)}' for key, value in attributes.items())
    return f' [{body}]'


def to_dot(
    graph: EmbeddedGraph,
    name: str = 'support',
    meaning: Optional[Mapping[str, str]] = None,
    coloring: Optional[Mapping[str, Color]] = None
) -> str:
    """
    Render a graph as an undirected DOT graph.

    Edge labels written by the rewrites become edge labels. Parallel edges and loops are kept, so a mid-pipeline
    multigraph renders as it is. The rotation system is not encoded, DOT has no notion of it.

    Args:
        graph: the graph to render.
        name: the DOT graph name.
        meaning: optional vertex labels, vertex ids are used when absent.
        coloring: optional red/blue vertex colors.
    """
    lines: List[str] = [f'graph {_quote(name)} {{']
    for vertex in graph.vertices:
        attributes: Dict[str, str] = {}
        if meaning and vertex in meaning and meaning[vertex] != vertex:
            attributes['label'] = f'{vertex}\\n{meaning[vertex]}'
        if coloring and vertex in coloring:
            attributes['color'] = coloring[vertex].value
        lines.append(f'  {_quote(vertex)}{_attributes(attributes)};')
    for edge in graph.edges():
        u, v = graph.endpoints(edge)
        label = graph.label(edge)
        lines.append(f'  {_quote(u)} -- {_quote(v)}{_attributes({"label": label} if label else {})};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def write_dot(text: str, path: pathlib.Path) -> None:
    """
    Write DOT text to a .dot or .gv file.

    Raises:
        CrossfreeError: the path has another extension.
    """
    path = pathlib.Path(path)
    if FileContentType.path_to_content_type(path) != FileContentType.DOT:
        raise CrossfreeError(f'DOT output needs a .dot or .gv file, not {path.name}')
    path.write_text(text, encoding=const.FILE_ENCODING)
    logger.debug(f'Wrote DOT graph to {path}')
