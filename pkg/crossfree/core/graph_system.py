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
Graph systems: an embedded host graph with named families of connected vertex subsets.

A member is stored as a vertex set and induces its subgraph on demand. H is always present. K is the second family of
an intersection system. An optional red/blue coloring marks the terminals (blue) of a primal support problem.
"""

import itertools
import logging
from collections import deque
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from crossfree.core import const
from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.chords import LABEL_FIRST, LABEL_SECOND, alternation_witness
from crossfree.core.embedding import Dart, EmbeddedGraph, contract_edge, remove_loops
from crossfree.core.err import CrossfreeNotFoundError, CrossfreeValidationError

logger = logging.getLogger(__name__)

Family = Dict[str, FrozenSet[str]]


class Color(str, Enum):
    """Terminal coloring, blue vertices are terminals."""

    red = 'red'
    blue = 'blue'


class CrossingWitness(CrossfreeBaseModel):
    """Four darts around a reduced vertex alternating between two members."""

    vertex: str
    members: Tuple[str, str]
    darts: List[int]
    neighbors: List[str]


class PiercingWitness(CrossfreeBaseModel):
    """An ordered pair of members whose difference falls apart."""

    members: Tuple[str, str]
    components: List[List[str]]


class DepthProfile(CrossfreeBaseModel):
    """Membership counts of vertices and edges (edges keyed by edge id)."""

    vertex_depth: Dict[str, int]
    edge_depth: Dict[int, int]

    def maximal(self, graph: EmbeddedGraph) -> List[str]:
        """Vertices whose depth exceeds the depth of every incident non-loop edge, sorted by id."""
        found = []
        for vertex, depth in self.vertex_depth.items():
            if depth == 0:
                continue
            if all(
                self.edge_depth[graph.canonical(d)] < depth for d in graph.rotation(vertex) if not graph.is_loop(d)
            ):
                found.append(vertex)
        return sorted(found)


def _freeze(family: Optional[Mapping[str, Iterable[str]]]) -> Optional[Family]:
    if family is None:
        return None
    return {name: frozenset(members) for name, members in family.items()}


class GraphSystem:
    """
    A host embedding with families H and optional K of connected induced subgraphs.

    Systems are values. Rewrites build new systems through with_().
    """

    def __init__(
        self,
        host: EmbeddedGraph,
        H: Mapping[str, Iterable[str]],
        K: Optional[Mapping[str, Iterable[str]]] = None,
        coloring: Optional[Mapping[str, Color]] = None,
        validate: bool = True
    ) -> None:
        """
        Build a system.

        Args:
            host: the embedded host graph.
            H: member name to vertex ids.
            K: optional second family.
            coloring: optional vertex colors, covering every vertex when given.
            validate: check connectivity of the host and of every member.

        Raises:
            CrossfreeValidationError: an unknown vertex, an empty or disconnected member, a disconnected host or a
                partial coloring.
        """
        self.host = host
        self.H: Family = _freeze(H) or {}
        self.K: Optional[Family] = _freeze(K)
        self.coloring: Optional[Dict[str, Color]] = None
        if coloring is not None:
            self.coloring = {v: Color(c) for v, c in coloring.items()}
        self._at: Dict[str, Dict[str, Set[str]]] = {}
        for which in self.scopes():
            index: Dict[str, Set[str]] = {v: set() for v in host.vertices}
            for name, members in self.family(which).items():
                for vertex in members:
                    if vertex not in index:
                        raise CrossfreeValidationError(f'Member {name} of {which} names unknown vertex {vertex}')
                    index[vertex].add(name)
            self._at[which] = index
        if validate:
            self.validate()

    def validate(self) -> None:
        """Check the structural invariants of the system."""
        if self.host.num_vertices == 0:
            raise CrossfreeValidationError('Host graph has no vertices')
        if not self.host.is_connected():
            raise CrossfreeValidationError('Host graph is not connected')
        for which in self.scopes():
            for name, members in self.family(which).items():
                if not members:
                    raise CrossfreeValidationError(f'Member {name} of {which} is empty')
                if not self.host.is_connected(members):
                    raise CrossfreeValidationError(f'Member {name} of {which} does not induce a connected subgraph')
        if self.coloring is not None:
            missing = [v for v in self.host.vertices if v not in self.coloring]
            if missing:
                raise CrossfreeValidationError(f'Coloring misses vertices {sorted(missing)}')
            stray = set(self.coloring).difference(self.host.vertices)
            if stray:
                raise CrossfreeValidationError(f'Coloring names unknown vertices {sorted(stray)}')

    def scopes(self) -> List[str]:
        """Families present in the system."""
        return [const.FAMILY_H] if self.K is None else [const.FAMILY_H, const.FAMILY_K]

    def family(self, which: str = const.FAMILY_H) -> Family:
        """Return H or K."""
        if which == const.FAMILY_H:
            return self.H
        if which == const.FAMILY_K:
            if self.K is None:
                raise CrossfreeNotFoundError('System has no K family')
            return self.K
        raise CrossfreeNotFoundError(f'Unknown family {which}')

    def members_at(self, vertex: str, which: str = const.FAMILY_H) -> FrozenSet[str]:
        """Names of the members of a family containing a vertex."""
        try:
            return frozenset(self._at[which][vertex])
        except KeyError:
            if which not in self._at:
                raise CrossfreeNotFoundError(f'System has no {which} family')
            raise CrossfreeNotFoundError(f'Vertex {vertex} is not in the host')

    def members_on_edge(self, dart: Dart, which: str = const.FAMILY_H) -> FrozenSet[str]:
        """Members containing both ends of an edge."""
        u, v = self.host.endpoints(dart)
        return self.members_at(u, which) & self.members_at(v, which)

    def color(self, vertex: str) -> Color:
        """Color of a vertex."""
        if self.coloring is None:
            raise CrossfreeValidationError('System has no coloring')
        return self.coloring[vertex]

    def is_k_vertex(self, vertex: str) -> bool:
        """A vertex covered by K but by no member of H."""
        return self.K is not None and bool(self._at[const.FAMILY_K][vertex]) and not self._at[const.FAMILY_H][vertex]

    def with_(
        self,
        host: Optional[EmbeddedGraph] = None,
        H: Optional[Mapping[str, Iterable[str]]] = None,
        K: Optional[Mapping[str, Iterable[str]]] = None,
        coloring: Optional[Mapping[str, Color]] = None,
        validate: bool = False
    ) -> 'GraphSystem':
        """Copy with some parts replaced."""
        return GraphSystem(
            self.host if host is None else host,
            self.H if H is None else H,
            self.K if K is None else K,
            self.coloring if coloring is None else coloring,
            validate=validate
        )

    def without_k(self) -> 'GraphSystem':
        """Copy with K removed."""
        return GraphSystem(self.host, self.H, None, self.coloring, validate=False)

    def __repr__(self) -> str:
        """Return a compact description."""
        k = 'none' if self.K is None else str(len(self.K))
        return f'GraphSystem(V={self.host.num_vertices}, E={self.host.num_edges}, |H|={len(self.H)}, |K|={k})'


def _member(system: GraphSystem, name: str, which: str) -> FrozenSet[str]:
    family = system.family(which)
    if name not in family:
        raise CrossfreeNotFoundError(f'Member {name} is not in {which}')
    return family[name]


def reduced_graph(
    system: GraphSystem,
    first: str,
    second: str,
    which: str = const.FAMILY_H,
    second_which: Optional[str] = None
) -> Tuple[EmbeddedGraph, Dict[str, str]]:
    """
    Contract every host edge with both ends in the intersection of two members.

    Returns:
        The contracted embedding without loops and a map from host vertices to their reduced vertex.
    """
    common = _member(system, first, which) & _member(system, second, second_which or which)
    graph = system.host
    origin = {v: v for v in graph.vertices}
    while True:
        edge = next(
            (e for e in graph.edges() if not graph.is_loop(e) and all(end in common for end in graph.endpoints(e))),
            None
        )
        if edge is None:
            break
        absorbed, survivor = graph.endpoints(edge)
        graph = contract_edge(graph, edge)
        for vertex, image in origin.items():
            if image == absorbed:
                origin[vertex] = survivor
    return remove_loops(graph), origin


def _boundary_darts(host: EmbeddedGraph, component: FrozenSet[str], root: str) -> List[Dart]:
    """
    Rotation of the vertex a connected vertex set contracts to, read off a spanning-tree walk.

    The tree is grown breadth first, neighbors taken in host vertex order, so it does not depend on where a rotation
    starts. Darts between two vertices of the set that are not tree edges would become loops and are skipped.
    """
    order = {v: i for i, v in enumerate(host.vertices)}
    tree: Set[Dart] = set()
    reached = {root}
    queue = deque([root])
    while queue:
        current = queue.popleft()
        inside = [d for d in host.rotation(current) if host.head(d) in component]
        for dart in sorted(inside, key=lambda d: (order[host.head(d)], d)):
            nxt = host.head(dart)
            if nxt not in reached:
                reached.add(nxt)
                tree.add(dart)
                tree.add(host.twin(dart))
                queue.append(nxt)
    start = host.rotation(root)
    if not start:
        return []
    boundary = []
    dart = start[0]
    while True:
        if dart in tree:
            dart = host.succ(host.twin(dart))
        else:
            if host.head(dart) not in component:
                boundary.append(dart)
            dart = host.succ(dart)
        if dart == start[0]:
            return boundary


def is_cross_free_at(
    system: GraphSystem,
    first: str,
    second: str,
    vertex: str,
    which: str = const.FAMILY_H,
    second_which: Optional[str] = None
) -> Tuple[bool, Optional[CrossingWitness]]:
    """
    Check two members for the abab pattern at the reduced vertex containing a vertex.

    Neighbors of the reduced vertex in only the first member and in only the second member are read in rotation
    order, parallel edges counted separately. Four alternations are a crossing. The rotation is read from the first
    host vertex of the common component.
    """
    one = _member(system, first, which)
    two = _member(system, second, second_which or which)
    if vertex not in one or vertex not in two or one <= two or two <= one:
        return True, None
    common = one & two
    anchored = next(c for c in system.host.components(common) if vertex in c)
    component = frozenset(anchored)
    items = []
    for dart in _boundary_darts(system.host, component, anchored[0]):
        head = system.host.head(dart)
        if head in one:
            items.append(((dart, head), LABEL_FIRST))
        elif head in two:
            items.append(((dart, head), LABEL_SECOND))
    found = alternation_witness(items)
    if found is None:
        return True, None
    return False, CrossingWitness(
        vertex=anchored[0], members=(first, second), darts=[d for d, _ in found], neighbors=[h for _, h in found]
    )


def _pair_witness(
    system: GraphSystem, first: str, second: str, which: str, second_which: str
) -> Optional[CrossingWitness]:
    common = system.family(which)[first] & system.family(second_which)[second]
    if not common:
        return None
    for component in system.host.components(common):
        free, witness = is_cross_free_at(system, first, second, component[0], which, second_which)
        if not free:
            return witness
    return None


def is_cross_free(system: GraphSystem,
                  which: Optional[str] = None,
                  mixed: bool = False) -> Tuple[bool, Optional[CrossingWitness]]:
    """
    Scan all member pairs for a crossing.

    Pairs within H and pairs within K are checked. H-versus-K pairs are checked only when mixed is set.

    Args:
        system: the system.
        which: restrict the scan to one family.
        mixed: also check H against K.

    Returns:
        (True, None) or (False, the first witness found).
    """
    scopes = system.scopes() if which is None else [which]
    for scope in scopes:
        for first, second in itertools.combinations(sorted(system.family(scope)), 2):
            witness = _pair_witness(system, first, second, scope, scope)
            if witness is not None:
                return False, witness
    if mixed and system.K is not None:
        for first, second in itertools.product(sorted(system.H), sorted(system.K)):
            witness = _pair_witness(system, first, second, const.FAMILY_H, const.FAMILY_K)
            if witness is not None:
                return False, witness
    return True, None


def crossing_at_vertex(system: GraphSystem, vertex: str, scopes: Sequence[str]) -> Optional[CrossingWitness]:
    """First crossing at a vertex among pairs of members of the same scoped family."""
    for which in scopes:
        for first, second in itertools.combinations(sorted(system.members_at(vertex, which)), 2):
            free, witness = is_cross_free_at(system, first, second, vertex, which)
            if not free:
                return witness
    return None


def is_non_piercing(system: GraphSystem, which: Optional[str] = None) -> Tuple[bool, Optional[PiercingWitness]]:
    """Check that the difference of every ordered pair of members induces a connected or empty subgraph."""
    for scope in (system.scopes() if which is None else [which]):
        family = system.family(scope)
        for first, second in itertools.permutations(sorted(family), 2):
            rest = family[first] - family[second]
            components = system.host.components(rest)
            if len(components) > 1:
                return False, PiercingWitness(members=(first, second), components=components)
    return True, None


def depth_profile(system: GraphSystem, which: str = const.FAMILY_H) -> DepthProfile:
    """Count memberships per vertex and per edge."""
    return DepthProfile(
        vertex_depth={v: len(system.members_at(v, which)) for v in system.host.vertices},
        edge_depth={e: len(system.members_on_edge(e, which)) for e in system.host.edges()}
    )


def maximal_vertices(system: GraphSystem,
                     which: str = const.FAMILY_H,
                     color: Optional[Color] = None,
                     among: Optional[Iterable[str]] = None) -> List[str]:
    """
    Maximal vertices sorted by id.

    Args:
        system: the system.
        which: family the depths count.
        color: keep only vertices of this color.
        among: keep only these vertices.
    """
    found = depth_profile(system, which).maximal(system.host)
    if color is not None:
        found = [v for v in found if system.color(v) == color]
    if among is not None:
        allowed = set(among)
        found = [v for v in found if v in allowed]
    return found


def twins(system: GraphSystem, which: str = const.FAMILY_H) -> List[List[str]]:
    """Groups of two or more vertices lying in exactly the same members."""
    groups: Dict[Tuple[str, ...], List[str]] = {}
    for vertex in system.host.vertices:
        groups.setdefault(tuple(sorted(system.members_at(vertex, which))), []).append(vertex)
    return [group for group in groups.values() if len(group) > 1]


def adjacent_twins(system: GraphSystem, which: str = const.FAMILY_H, color: Optional[Color] = None) -> List[Dart]:
    """Edge ids joining two distinct twins, optionally both of one color."""
    found = []
    for edge in system.host.edges():
        u, v = system.host.endpoints(edge)
        if u == v or system.members_at(u, which) != system.members_at(v, which):
            continue
        if color is not None and (system.color(u) != color or system.color(v) != color):
            continue
        found.append(edge)
    return found
