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
"""
Vertex bypassing.

Bypassing v subdivides every edge at v, replaces v by a cycle through the subdividing vertices and adds non-crossing
chords inside that cycle so each affected member stays connected. Each subdividing vertex inherits the members of the
edge it subdivides.
"""

import logging
from typing import Dict, List, Tuple

from crossfree.core import const
from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.chords import ChordSet, CycleSystem, chord_set
from crossfree.core.embedding import remove_loops, replace_vertex_with_cycle, subdivide_edge, total_genus
from crossfree.core.err import ContractViolation, CrossfreeNotFoundError, CrossfreeValidationError
from crossfree.core.graph_system import DepthProfile, GraphSystem, crossing_at_vertex, depth_profile, is_cross_free

logger = logging.getLogger(__name__)

MEMBER_SEP = ':'


class BypassRecord(CrossfreeBaseModel):
    """What a single bypass did. Member keys are written family:name."""

    bypassed_vertex: str
    scope: str
    subdividing_vertices: List[str]
    inherited: Dict[str, List[str]]
    chords: ChordSet
    family_rewrites: Dict[str, List[str]]
    dropped: List[str] = []


class BypassDepthReport(CrossfreeBaseModel):
    """Depths around a bypassed vertex."""

    vertex_depth: int
    subdivider_depths: Dict[str, int]


def scoped_families(system: GraphSystem, scope: str) -> List[str]:
    """Families a bypass scope rewrites."""
    if scope == const.SCOPE_BOTH:
        return system.scopes()
    if scope not in (const.FAMILY_H, const.FAMILY_K):
        raise CrossfreeValidationError(f'Unknown bypass scope {scope}')
    system.family(scope)
    return [scope]


def _key(which: str, name: str) -> str:
    return f'{which}{MEMBER_SEP}{name}'


def vertex_bypass(system: GraphSystem, vertex: str, scope: str = const.FAMILY_H,
                  audit: bool = False) -> Tuple[GraphSystem, BypassRecord]:
    """
    Bypass a vertex.

    Args:
        system: the system, cross-free at the vertex for the scoped families.
        vertex: the vertex to bypass.
        scope: H, K or both.
        audit: rescan the whole result for crossings.

    Returns:
        The rewritten system and the record of the rewrite.

    Raises:
        ContractViolation: the scoped members cross at the vertex, an unscoped member contains it, or the result
            fails its checks.
    """
    if not system.host.has_vertex(vertex):
        raise CrossfreeNotFoundError(f'Vertex {vertex} is not in the host')
    scopes = scoped_families(system, scope)
    witness = crossing_at_vertex(system, vertex, scopes)
    if witness is not None:
        raise ContractViolation(f'Members {witness.members[0]} and {witness.members[1]} cross at {vertex}', witness)
    for which in system.scopes():
        if which not in scopes and system.members_at(vertex, which):
            raise ContractViolation(f'Bypassing {vertex} would change {which} members outside the scope')

    host = remove_loops(system.host, vertex)
    neighbors = host.neighbors(vertex)
    inherited: Dict[str, List[str]] = {}
    subdividers: List[str] = []
    for dart, neighbor in zip(host.rotation(vertex), neighbors):
        host, middle = subdivide_edge(host, dart, name=f'{vertex}{const.VERTEX_SEP}{neighbor}')
        subdividers.append(middle)
        inherited[middle] = sorted(
            _key(which, name)
            for which in scopes
            for name in system.members_at(vertex, which) & system.members_at(neighbor, which)
        )

    affected = sorted(_key(which, name) for which in scopes for name in system.members_at(vertex, which))
    cycle_system = CycleSystem(
        cycle=subdividers, families={key: [u for u in subdividers if key in inherited[u]] for key in affected}
    )
    chords = chord_set(cycle_system)
    host, _ = replace_vertex_with_cycle(host, vertex, chords=chords.pairs())

    rewrites: Dict[str, List[str]] = {}
    dropped: List[str] = []
    families = {}
    for which in system.scopes():
        family = dict(system.family(which))
        if which in scopes:
            for name in sorted(system.members_at(vertex, which)):
                key = _key(which, name)
                updated = (family[name] - {vertex}) | {u for u in subdividers if key in inherited[u]}
                if updated:
                    family[name] = frozenset(updated)
                    rewrites[key] = sorted(updated)
                else:
                    del family[name]
                    dropped.append(key)
        families[which] = family

    coloring = None
    if system.coloring is not None:
        coloring = {v: c for v, c in system.coloring.items() if v != vertex}
        for middle in subdividers:
            coloring[middle] = system.coloring[vertex]

    result = GraphSystem(
        host, families[const.FAMILY_H], families.get(const.FAMILY_K), coloring=coloring, validate=False
    )
    record = BypassRecord(
        bypassed_vertex=vertex,
        scope=scope,
        subdividing_vertices=subdividers,
        inherited=inherited,
        chords=chords,
        family_rewrites=rewrites,
        dropped=dropped
    )
    _check_result(system, result, record, scopes, audit)
    logger.debug(f'Bypassed {vertex} into {len(subdividers)} vertices with {len(chords.chords)} chords')
    return result, record


def _check_result(before: GraphSystem, after: GraphSystem, record: BypassRecord, scopes: List[str],
                  audit: bool) -> None:
    try:
        after.validate()
    except CrossfreeValidationError as e:
        raise ContractViolation(f'Bypass of {record.bypassed_vertex} broke the system: {e.msg}', record)
    if total_genus(after.host) != total_genus(before.host):
        raise ContractViolation(f'Bypass of {record.bypassed_vertex} changed the genus', record)
    if audit:
        free, witness = is_cross_free(after)
        if not free:
            raise ContractViolation(f'Bypass of {record.bypassed_vertex} produced a crossing', witness)


def depth_after_bypass(record: BypassRecord,
                       before: DepthProfile,
                       after: GraphSystem,
                       which: str = const.FAMILY_H) -> BypassDepthReport:
    """
    Check that every subdividing vertex is shallower than the bypassed vertex and not maximal.

    Args:
        record: the bypass record.
        before: depth profile of the system before the bypass.
        after: the system the bypass returned.
        which: family the depths count.

    Raises:
        ContractViolation: some subdividing vertex is too deep or maximal.
    """
    depth = before.vertex_depth[record.bypassed_vertex]
    profile = depth_profile(after, which)
    maximal = set(profile.maximal(after.host))
    depths = {}
    for middle in record.subdividing_vertices:
        depths[middle] = profile.vertex_depth[middle]
        if depths[middle] >= depth:
            raise ContractViolation(f'Subdividing vertex {middle} has depth {depths[middle]}, bypassed depth {depth}')
        if middle in maximal:
            raise ContractViolation(f'Subdividing vertex {middle} is maximal')
    return BypassDepthReport(vertex_depth=depth, subdivider_depths=depths)
