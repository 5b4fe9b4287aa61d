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
"""Reports written by the crossfree commands."""

from collections import Counter
from typing import Dict, List, Optional, Tuple

from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.embedding import EmbeddedGraph
from crossfree.core.graph_system import CrossingWitness, PiercingWitness
from crossfree.core.regions import GridSpec, SystemVerdict
from crossfree.core.solver import ColoringResult, OptimumResult, SolverResult
from crossfree.core.supports import SpecialEdgeCertificate, SupportResult


class CheckReport(CrossfreeBaseModel):
    """Structural verdicts on a system file."""

    vertices: int
    edges: int
    genus: int
    cross_free: bool
    crossing: Optional[CrossingWitness] = None
    non_piercing: bool
    piercing: Optional[PiercingWitness] = None
    mixed_cross_free: Optional[bool] = None
    mixed_crossing: Optional[CrossingWitness] = None


class SupportReport(CrossfreeBaseModel):
    """A constructed support, with enough embedding data to re-verify it."""

    mode: str
    vertices: List[str]
    rotations: Dict[str, List[str]]
    edges: List[Tuple[str, str]]
    vertex_meaning: Dict[str, str]
    certified_genus: int
    host_genus: int
    steps: Dict[str, int] = {}
    special_edges: Optional[SpecialEdgeCertificate] = None

    @classmethod
    def from_result(cls, result: SupportResult, host_genus: int) -> 'SupportReport':
        """Summarize a construction result."""
        support = result.support
        return cls(
            mode=result.mode,
            vertices=support.vertices,
            rotations=support.rotation_names(),
            edges=[(u, v) for u, v in support.edge_pairs()],
            vertex_meaning=result.vertex_meaning,
            certified_genus=result.certified_genus,
            host_genus=host_genus,
            steps=dict(Counter(step.kind.value for step in result.log)),
            special_edges=result.special_edges
        )

    def to_graph(self) -> EmbeddedGraph:
        """Rebuild the support embedding."""
        return EmbeddedGraph.from_rotation({v: self.rotations[v] for v in self.vertices})


class VerifyReport(CrossfreeBaseModel):
    """Independent re-verification of a support report."""

    mode: str
    passed: bool
    is_support: bool
    failing_hyperedge: Optional[str] = None
    simple: bool
    genus: int
    host_genus: int
    special_edges: Optional[bool] = None
    failing_special_edge: Optional[str] = None


class ColorReport(CrossfreeBaseModel):
    """Coloring of a support's vertices."""

    mode: str
    coloring: ColoringResult
    non_monochromatic: bool
    failing_hyperedge: Optional[str] = None


class SolveReport(CrossfreeBaseModel):
    """Local-search solution, with the exact optimum when asked for."""

    mode: str
    result: SolverResult
    optimum: Optional[OptimumResult] = None
    ratio: Optional[float] = None


class GridReport(CrossfreeBaseModel):
    """What gen wrote."""

    grid: GridSpec
    seed: int
    regions: int
    k_regions: int
    verdict: SystemVerdict
