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
Primal, dual and intersection supports of cross-free graph systems.

Each construction rewrites the host embedding by contractions, vertex bypasses and pendant attachments, so the
support it ends with is embedded on the host's surface. Every result is checked by the independent verifiers before
it is returned.
"""

import logging
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from crossfree.core import const
from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.bypass import vertex_bypass
from crossfree.core.config import PipelineSettings
from crossfree.core.embedding import EmbeddedGraph, add_pendant, contract_edge, delete_edge, relabel, simplify
from crossfree.core.embedding import total_genus
from crossfree.core.err import ContractViolation, CrossfreeValidationError, StepBudgetExhausted
from crossfree.core.graph_system import Color, GraphSystem, adjacent_twins, depth_profile, is_cross_free
from crossfree.core.verify import extract_hypergraph, is_simple, is_support

logger = logging.getLogger(__name__)


class RewriteKind(str, Enum):
    """Kinds of rewrite step."""

    bypass = 'bypass'
    contraction = 'contraction'
    drop = 'drop'
    strip = 'strip'
    simplify = 'simplify'
    normalize = 'normalize'
    pendant = 'pendant'


class RewriteStep(CrossfreeBaseModel):
    """One entry of a construction log."""

    kind: RewriteKind
    detail: str


class SpecialEdge(CrossfreeBaseModel):
    """A special host edge and the support edge that serves it."""

    host_edge: Tuple[str, str]
    support_edge: Tuple[str, str]


class SpecialEdgeCertificate(CrossfreeBaseModel):
    """Support edges witnessing the special-edge property."""

    edges: List[SpecialEdge] = []


class SupportResult(CrossfreeBaseModel):
    """A constructed support with its provenance."""

    class Config:
        """Embeddings are plain objects."""

        arbitrary_types_allowed = True

    mode: str
    support: EmbeddedGraph
    vertex_meaning: Dict[str, str]
    log: List[RewriteStep] = []
    certified_genus: int = 0
    special_edges: Optional[SpecialEdgeCertificate] = None


class _Rewriter:
    """Holds the system under rewrite, the step budget and the log."""

    def __init__(self, system: GraphSystem, settings: PipelineSettings) -> None:
        self.system = system
        self.settings = settings
        self.log: List[RewriteStep] = []

    def record(self, kind: RewriteKind, detail: str) -> None:
        if len(self.log) >= self.settings.step_budget:
            raise StepBudgetExhausted(f'Construction exceeded its budget of {self.settings.step_budget} rewrite steps')
        self.log.append(RewriteStep(kind=kind, detail=detail))
        logger.debug(f'{kind.value}: {detail}')

    def audit(self) -> None:
        if not self.settings.audit:
            return
        try:
            self.system.validate()
        except CrossfreeValidationError as e:
            raise ContractViolation(f'Rewrite broke the system: {e.msg}')
        free, witness = is_cross_free(self.system)
        if not free:
            raise ContractViolation('Rewrite produced a crossing', witness)

    def contract(self, absorbed: str, survivor: str) -> None:
        """Contract an edge, merging absorbed into survivor. Members at absorbed must all contain survivor."""
        system = self.system
        for which in system.scopes():
            if not system.members_at(absorbed, which) <= system.members_at(survivor, which):
                raise ContractViolation(f'Cannot contract {absorbed} into {survivor}: {which} members differ')
        dart = system.host.find_dart(absorbed, survivor)
        if dart is None:
            raise ContractViolation(f'{absorbed} and {survivor} are not adjacent')
        host = contract_edge(system.host, dart)
        families = {
            which: {name: members - {absorbed} for name, members in system.family(which).items()}
            for which in system.scopes()
        }
        coloring = None
        if system.coloring is not None:
            coloring = {v: c for v, c in system.coloring.items() if v != absorbed}
        self.system = GraphSystem(
            host, families[const.FAMILY_H], families.get(const.FAMILY_K), coloring=coloring, validate=False
        )
        self.record(RewriteKind.contraction, f'{absorbed} into {survivor}')
        self.audit()

    def bypass(self, vertex: str, scope: str) -> List[str]:
        """Bypass a vertex and return its subdividing vertices."""
        self.system, record = vertex_bypass(self.system, vertex, scope, audit=self.settings.audit)
        self.record(
            RewriteKind.bypass,
            f'{vertex} into {len(record.subdividing_vertices)} vertices with {len(record.chords.chords)} chords'
        )
        return record.subdividing_vertices

    def drop(self, which: str, names: List[str]) -> None:
        """Remove members that no longer constrain the support."""
        if not names:
            return
        family = {n: m for n, m in self.system.family(which).items() if n not in names}
        if which == const.FAMILY_H:
            self.system = self.system.with_(H=family)
        else:
            self.system = GraphSystem(self.system.host, self.system.H, family, self.system.coloring, validate=False)
        self.record(RewriteKind.drop, f'{which} members {", ".join(sorted(names))}')

    def simplify(self) -> None:
        before = self.system.host.num_edges
        self.system = self.system.with_(host=simplify(self.system.host))
        self.record(RewriteKind.simplify, f'{before - self.system.host.num_edges} loops or parallel edges removed')


def _settings(settings: Optional[PipelineSettings]) -> PipelineSettings:
    return settings if settings is not None else PipelineSettings()


def _require_cross_free(system: GraphSystem) -> None:
    free, witness = is_cross_free(system)
    if not free:
        raise ContractViolation(
            f'Members {witness.members[0]} and {witness.members[1]} cross at {witness.vertex}', witness
        )


def _contract_twins(rw: _Rewriter, which: str, color: Optional[Color] = None, k_vertices: bool = False) -> None:
    """Contract adjacent twins until none are left."""
    while True:
        system = rw.system
        candidates = adjacent_twins(system, which, color)
        if k_vertices:
            candidates = [e for e in candidates if all(system.is_k_vertex(v) for v in system.host.endpoints(e))]
        if not candidates:
            return
        absorbed, survivor = system.host.endpoints(candidates[0])
        rw.contract(absorbed, survivor)


def _contract_red_forest(rw: _Rewriter) -> None:
    """
    Contract every red vertex into a blue one.

    With no maximal red vertex and no adjacent red twins, every red vertex has a neighbor whose members include all of
    its own, blue preferred. Following these choices reaches a blue vertex, and the red vertices are contracted
    deepest first.
    """
    system = rw.system
    host = system.host
    parent: Dict[str, str] = {}
    for vertex in host.vertices:
        if system.color(vertex) != Color.red:
            continue
        mine = system.members_at(vertex)
        full = [u for u in host.neighbors(vertex) if u != vertex and mine <= system.members_at(u)]
        blue = [u for u in full if system.color(u) == Color.blue]
        strict = [u for u in full if system.color(u) == Color.red and mine < system.members_at(u)]
        if blue:
            parent[vertex] = blue[0]
        elif strict:
            parent[vertex] = strict[0]
        else:
            raise ContractViolation(f'Red vertex {vertex} has no edge to a vertex containing all its members')

    def distance(vertex: str) -> int:
        steps = 0
        while vertex in parent:
            vertex = parent[vertex]
            steps += 1
            if steps > len(parent):
                raise ContractViolation('Red contraction choices form a cycle')
        return steps

    for vertex in sorted(parent, key=lambda v: (-distance(v), v)):
        rw.contract(vertex, parent[vertex])


def _finish(rw: _Rewriter, mode: str, original: GraphSystem, support: EmbeddedGraph, meaning: Dict[str, str],
            special: Optional[SpecialEdgeCertificate] = None) -> SupportResult:
    """Verify a support against the input system and package it."""
    if not is_simple(support):
        raise ContractViolation(f'{mode} support is not simple')
    hg = extract_hypergraph(original, mode)
    ok, failing = is_support(support, hg)
    if not ok:
        raise ContractViolation(f'{mode} support leaves hyperedge {failing} disconnected')
    genus = total_genus(support)
    host_genus = total_genus(original.host)
    if genus > host_genus:
        raise ContractViolation(f'{mode} support has genus {genus}, above the host genus {host_genus}')
    logger.debug(f'{mode} support: {support.num_vertices} vertices, {support.num_edges} edges, genus {genus}')
    return SupportResult(
        mode=mode, support=support, vertex_meaning=meaning, log=rw.log, certified_genus=genus, special_edges=special
    )


def _reduce_maximal_reds(rw: _Rewriter) -> None:
    """Bypass maximal red vertices, deepest first, until none is left."""
    last = None
    while True:
        _contract_twins(rw, const.FAMILY_H, Color.red)
        system = rw.system
        profile = depth_profile(system)
        reds = [v for v in profile.maximal(system.host) if system.color(v) == Color.red]
        if not reds:
            return
        depth = max(profile.vertex_depth[v] for v in reds)
        if last is not None and depth >= last:
            raise ContractViolation(f'Maximal red depth did not decrease: {depth} after {last}')
        last = depth
        targets = [v for v in reds if profile.vertex_depth[v] == depth]
        if depth == 1:
            # a maximal vertex of depth one is a whole member by itself
            rw.drop(const.FAMILY_H, sorted({n for v in targets for n in system.members_at(v)}))
            continue
        for vertex in targets:
            rw.bypass(vertex, const.FAMILY_H)


def primal_support(system: GraphSystem, settings: Optional[PipelineSettings] = None) -> SupportResult:
    """
    Build a support on the blue vertices with genus at most the host genus.

    Adjacent red twins are contracted, maximal red vertices are bypassed from the deepest level down, and the
    remaining red vertices are contracted into blue ones.

    Raises:
        CrossfreeValidationError: the system has no coloring.
        ContractViolation: the system is not cross-free, or a step breaks an invariant.
        StepBudgetExhausted: more rewrites than the budget allows.
    """
    if system.coloring is None:
        raise CrossfreeValidationError('Primal support needs a red/blue coloring')
    _require_cross_free(system.without_k())
    rw = _Rewriter(system.without_k(), _settings(settings))
    if not any(c == Color.blue for c in system.coloring.values()):
        logger.warning('No blue vertex, the primal support is empty')
        return SupportResult(mode=const.MODE_PRIMAL, support=EmbeddedGraph.empty(), vertex_meaning={})
    _reduce_maximal_reds(rw)
    _contract_red_forest(rw)
    rw.simplify()
    support = rw.system.host
    return _finish(rw, const.MODE_PRIMAL, system, support, {v: v for v in support.vertices})


def _strict_below(a: Tuple[str, FrozenSet[str]], b: Tuple[str, FrozenSet[str]]) -> bool:
    """Containment order on members, equal sets ordered by name."""
    return a[1] < b[1] or (a[1] == b[1] and a[0] < b[0])


def strip_containment(family: Dict[str, FrozenSet[str]]) -> Tuple[Dict[str, FrozenSet[str]], List[Tuple[str, str]]]:
    """
    Remove members contained in other members until none is.

    The removed member is the bottom of a longest containment chain, ties broken by size and then name. Its parent is
    its smallest superset by size and then name, which is an immediate successor.

    Returns:
        The remaining antichain and (removed, parent) pairs in removal order.
    """
    remaining = dict(family)
    removed: List[Tuple[str, str]] = []
    while True:
        items = sorted(remaining.items(), key=lambda item: (len(item[1]), item[0]))
        above: Dict[str, int] = {}
        for name, members in reversed(items):
            higher = [above[n] for n, m in items if _strict_below((name, members), (n, m))]
            above[name] = 1 + max(higher) if higher else 0
        bottoms = [
            (name, members) for name, members in items
            if above[name] > 0 and not any(_strict_below((n, m), (name, members)) for n, m in items)
        ]
        if not bottoms:
            return remaining, removed
        name, members = min(bottoms, key=lambda item: (-above[item[0]], len(item[1]), item[0]))
        parent = min(
            (n for n, m in items if _strict_below((name, members), (n, m))), key=lambda n: (len(remaining[n]), n)
        )
        removed.append((name, parent))
        del remaining[name]


def _special_edges(system: GraphSystem) -> List[Tuple[str, str]]:
    found = []
    for edge in system.host.edges():
        u, v = system.host.endpoints(edge)
        if u != v and system.members_at(u) and system.members_at(v) and not system.members_on_edge(edge):
            found.append((u, v))
    return found


def _certify_special_edges(stripped: GraphSystem, support: EmbeddedGraph) -> SpecialEdgeCertificate:
    certificate = SpecialEdgeCertificate()
    for u, v in _special_edges(stripped):
        chosen = next(
            ((a, b)
             for a in sorted(stripped.members_at(u))
             for b in sorted(stripped.members_at(v))
             if support.adjacent(a, b)),
            None
        )
        if chosen is None:
            raise ContractViolation(f'Special edge {u}-{v} has no support edge between its members')
        certificate.edges.append(SpecialEdge(host_edge=(u, v), support_edge=chosen))
    return certificate


def _reduce_depth(rw: _Rewriter) -> None:
    """Lower the maximum depth to one by full-edge contractions and bypasses."""
    last = None
    while True:
        system = rw.system
        profile = depth_profile(system)
        depth = max(profile.vertex_depth.values())
        if depth <= 1:
            return
        deepest = sorted(v for v, d in profile.vertex_depth.items() if d == depth)
        if last is not None and (depth, len(deepest)) >= last:
            raise ContractViolation(f'Depth measure did not decrease: {(depth, len(deepest))} after {last}')
        last = (depth, len(deepest))
        vertex = deepest[0]
        mine = system.members_at(vertex)
        full = next((u for u in system.host.neighbors(vertex) if u != vertex and mine <= system.members_at(u)), None)
        if full is not None:
            rw.contract(vertex, full)
            continue
        cycle = rw.bypass(vertex, const.FAMILY_H)
        alive = list(cycle)
        for middle in cycle:
            if rw.system.members_at(middle) or len(alive) == 1:
                continue
            # merge clockwise: into the cycle vertex before it
            position = alive.index(middle)
            rw.contract(middle, alive[position - 1])
            alive.remove(middle)


def _contract_contained_edges(rw: _Rewriter) -> None:
    """Contract edges whose one end lies in no member the other end misses, by edge id."""
    while True:
        system = rw.system
        host = system.host
        step = None
        for edge in host.edges():
            u, v = host.endpoints(edge)
            if u == v:
                continue
            if system.members_at(u) <= system.members_at(v):
                step = (u, v)
            elif system.members_at(v) <= system.members_at(u):
                step = (v, u)
            if step is not None:
                break
        if step is None:
            return
        rw.contract(*step)


def _normalize_singletons(rw: _Rewriter, stripped: GraphSystem, support: EmbeddedGraph) -> EmbeddedGraph:
    """Remove support edges between one-vertex members of depth one whose vertices are not adjacent in the host."""
    lone = {}
    for name, members in stripped.H.items():
        if len(members) == 1:
            (vertex, ) = members
            if len(stripped.members_at(vertex)) == 1:
                lone[name] = vertex
    for edge in support.edges():
        a, b = support.endpoints(edge)
        if a in lone and b in lone and not stripped.host.adjacent(lone[a], lone[b]):
            trimmed = delete_edge(support, edge)
            if trimmed.is_connected():
                support = trimmed
                rw.record(RewriteKind.normalize, f'support edge {a}-{b} removed')
    return support


def _dual(system: GraphSystem, rw: _Rewriter) -> Tuple[EmbeddedGraph, SpecialEdgeCertificate]:
    stripped_family, removed = strip_containment(system.H)
    for name, parent in removed:
        rw.record(RewriteKind.strip, f'{name} inside {parent}')
    stripped = system.with_(H=stripped_family)
    rw.system = stripped
    _reduce_depth(rw)
    _contract_contained_edges(rw)
    rw.simplify()
    final = rw.system
    naming = {}
    for vertex in final.host.vertices:
        members = final.members_at(vertex)
        if len(members) != 1:
            raise ContractViolation(f'Vertex {vertex} lies in {len(members)} members after the depth reduction')
        (naming[vertex], ) = members
    support = relabel(final.host, naming)
    support = _normalize_singletons(rw, stripped, support)
    certificate = _certify_special_edges(stripped, support)
    for name, parent in reversed(removed):
        support = add_pendant(support, parent, name)
        rw.record(RewriteKind.pendant, f'{name} at {parent}')
    return support, certificate


def dual_support(system: GraphSystem,
                 settings: Optional[PipelineSettings] = None) -> Tuple[SupportResult, SpecialEdgeCertificate]:
    """
    Build a support on the H members with genus at most the host genus.

    Contained members are set aside, the depth is brought down to one, and each remaining vertex is named after its
    single member. Members set aside come back as pendant vertices on their parent.

    Raises:
        ContractViolation: the system is not cross-free, or a step breaks an invariant.
        StepBudgetExhausted: more rewrites than the budget allows.
    """
    plain = system.without_k()
    _require_cross_free(plain)
    rw = _Rewriter(plain, _settings(settings))
    if not plain.H:
        logger.warning('H is empty, the dual support is empty')
        empty = SpecialEdgeCertificate()
        return SupportResult(mode=const.MODE_DUAL, support=EmbeddedGraph.empty(), vertex_meaning={}), empty
    support, certificate = _dual(plain, rw)
    result = _finish(rw, const.MODE_DUAL, plain, support, {n: n for n in support.vertices}, certificate)
    return result, certificate


def _drop_idle_k(rw: _Rewriter) -> None:
    """Drop K members meeting no H member."""
    system = rw.system
    covered = frozenset().union(*system.H.values()) if system.H else frozenset()
    rw.drop(const.FAMILY_K, sorted(n for n, m in system.K.items() if not m & covered))


def _reduce_k_vertices(rw: _Rewriter) -> None:
    """Bypass maximal K-vertices, deepest first, until none is left."""
    last = None
    while True:
        _drop_idle_k(rw)
        _contract_twins(rw, const.FAMILY_K, k_vertices=True)
        system = rw.system
        profile = depth_profile(system, const.FAMILY_K)
        maximal = [v for v in profile.maximal(system.host) if system.is_k_vertex(v)]
        if not maximal:
            return
        depth = max(profile.vertex_depth[v] for v in maximal)
        if last is not None and depth >= last:
            raise ContractViolation(f'Maximal K-vertex depth did not decrease: {depth} after {last}')
        last = depth
        for vertex in (v for v in maximal if profile.vertex_depth[v] == depth):
            rw.bypass(vertex, const.FAMILY_K)


def intersection_support(system: GraphSystem, settings: Optional[PipelineSettings] = None) -> SupportResult:
    """
    Build a support on the H members for the hypergraph of K members with genus at most the host genus.

    Maximal K-vertices are bypassed away, a dummy member is put on every remaining K-vertex, and a dual support of H
    with the dummies is built. The dummies are then contracted out with the K members lifted onto that support.

    Raises:
        CrossfreeValidationError: the system has no K.
        ContractViolation: H or K is not cross-free, or a step breaks an invariant.
        StepBudgetExhausted: more rewrites than the budget allows.
    """
    if system.K is None:
        raise CrossfreeValidationError('Intersection support needs a K family')
    _require_cross_free(system)
    plain = GraphSystem(system.host, system.H, system.K, validate=False)
    rw = _Rewriter(plain, _settings(settings))
    if not system.H:
        logger.warning('H is empty, the intersection support is empty')
        return SupportResult(mode=const.MODE_INTERSECTION, support=EmbeddedGraph.empty(), vertex_meaning={})
    _reduce_k_vertices(rw)

    reduced = rw.system
    dummies: Dict[str, FrozenSet[str]] = {}
    for vertex in reduced.host.vertices:
        if reduced.is_k_vertex(vertex):
            name = f'{const.DUMMY_PREFIX}{const.VERTEX_SEP}{vertex}'
            while name in reduced.H or name in dummies:
                name = f'{name}{const.VERTEX_SEP}'
            dummies[name] = frozenset([vertex])
    if dummies:
        rw.record(RewriteKind.pendant, f'{len(dummies)} dummy members on K-vertices')
    widened = GraphSystem(reduced.host, {**reduced.H, **dummies}, validate=False)
    rw.system = widened
    q, _ = _dual(widened, rw)

    everything = widened.H
    lifted = {
        k_name: [x for x, members in everything.items() if members & k_members]
        for k_name, k_members in reduced.K.items()
    }
    coloring = {x: (Color.red if x in dummies else Color.blue) for x in q.vertices}
    try:
        rw.system = GraphSystem(q, lifted, coloring=coloring)
    except CrossfreeValidationError as e:
        raise ContractViolation(f'Lifted K members are not connected on the dual support: {e.msg}')
    if adjacent_twins(rw.system, const.FAMILY_H, Color.red):
        raise ContractViolation('Dual support has adjacent dummy twins')
    profile = depth_profile(rw.system)
    if any(rw.system.color(v) == Color.red for v in profile.maximal(q)):
        raise ContractViolation('Dual support has a maximal dummy vertex')
    _contract_red_forest(rw)
    rw.simplify()
    support = rw.system.host
    return _finish(rw, const.MODE_INTERSECTION, system, support, {n: n for n in support.vertices})
