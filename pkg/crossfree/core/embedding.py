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
Dart-based combinatorial embeddings of multigraphs on oriented surfaces.

An edge is a pair of twin darts, one leaving each endpoint. The rotation of a vertex is the counterclockwise cyclic
sequence of its darts. Loops and parallel edges are ordinary dart pairs, which is what keeps contraction exact.

Graphs are values. Every edit below returns a new EmbeddedGraph and leaves its input untouched.
"""

import logging
from collections import deque
from typing import Collection, Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from crossfree.core import const
from crossfree.core.err import CrossfreeNotFoundError, EmbeddingError

logger = logging.getLogger(__name__)

Dart = int
Face = Tuple[Dart, ...]


class EmbeddedGraph:
    """
    A multigraph together with a rotation system.

    Attributes are private. Queries go through the accessors so that the dart bookkeeping stays consistent.
    """

    def __init__(
        self,
        rotation: Mapping[str, Sequence[Dart]],
        twin: Mapping[Dart, Dart],
        labels: Optional[Mapping[Dart, str]] = None
    ) -> None:
        """
        Build and validate an embedding.

        Args:
            rotation: vertex id to its darts in counterclockwise order.
            twin: the dart involution.
            labels: optional edge annotations keyed by either dart of the edge.

        Raises:
            EmbeddingError: a dart is missing its twin, is its own twin or sits in two rotations.
        """
        self._rotation: Dict[str, Tuple[Dart, ...]] = {v: tuple(darts) for v, darts in rotation.items()}
        self._owner: Dict[Dart, str] = {}
        self._position: Dict[Dart, int] = {}
        for vertex, darts in self._rotation.items():
            for index, dart in enumerate(darts):
                if dart in self._owner:
                    raise EmbeddingError(f'Dart {dart} appears in the rotations of {self._owner[dart]} and {vertex}')
                self._owner[dart] = vertex
                self._position[dart] = index
        self._twin: Dict[Dart, Dart] = {}
        for dart in self._owner:
            partner = twin.get(dart)
            if partner is None:
                raise EmbeddingError(f'Dart {dart} at {self._owner[dart]} has no twin')
            if partner == dart:
                raise EmbeddingError(f'Dart {dart} is its own twin')
            if partner not in self._owner:
                raise EmbeddingError(f'Twin {partner} of dart {dart} is not in any rotation')
            if twin.get(partner) != dart:
                raise EmbeddingError(f'Twin map is not an involution at dart {dart}')
            self._twin[dart] = partner
        self._labels: Dict[Dart, str] = {}
        for dart, label in (labels or {}).items():
            if dart in self._owner:
                self._labels[self.canonical(dart)] = label

    @classmethod
    def empty(cls) -> 'EmbeddedGraph':
        """Return the graph with no vertices."""
        return cls({}, {})

    @classmethod
    def from_rotation(cls, rotation: Mapping[str, Sequence[str]]) -> 'EmbeddedGraph':
        """
        Build a simple embedded graph from neighbor-name rotations.

        Args:
            rotation: vertex id to its neighbors in counterclockwise order, each neighbor listed once.

        Raises:
            EmbeddingError: a neighbor is unknown, repeated, the vertex itself, or does not list the vertex back.
        """
        dart_of: Dict[Tuple[str, str], Dart] = {}
        darts: Dict[str, List[Dart]] = {}
        next_id = 0
        for vertex, neighbors in rotation.items():
            darts[vertex] = []
            for neighbor in neighbors:
                if neighbor not in rotation:
                    raise EmbeddingError(f'Rotation of {vertex} names unknown vertex {neighbor}')
                if neighbor == vertex:
                    raise EmbeddingError(f'Rotation of {vertex} lists itself, loops are not accepted on input')
                if (vertex, neighbor) in dart_of:
                    raise EmbeddingError(f'Rotation of {vertex} lists {neighbor} more than once')
                dart_of[(vertex, neighbor)] = next_id
                darts[vertex].append(next_id)
                next_id += 1
        twin: Dict[Dart, Dart] = {}
        for (vertex, neighbor), dart in dart_of.items():
            back = dart_of.get((neighbor, vertex))
            if back is None:
                raise EmbeddingError(f'{vertex} lists {neighbor} but {neighbor} does not list {vertex}')
            twin[dart] = back
        return cls(darts, twin)

    # basic queries

    @property
    def vertices(self) -> List[str]:
        """Vertex ids in insertion order."""
        return list(self._rotation)

    @property
    def num_vertices(self) -> int:
        """Number of vertices."""
        return len(self._rotation)

    @property
    def num_edges(self) -> int:
        """Number of edges, loops and parallel copies included."""
        return len(self._owner) // 2

    def has_vertex(self, vertex: str) -> bool:
        """Check whether a vertex exists."""
        return vertex in self._rotation

    def rotation(self, vertex: str) -> Tuple[Dart, ...]:
        """Darts leaving a vertex in counterclockwise order."""
        try:
            return self._rotation[vertex]
        except KeyError:
            raise CrossfreeNotFoundError(f'Vertex {vertex} is not in the graph')

    def darts(self) -> List[Dart]:
        """All darts in increasing id order."""
        return sorted(self._owner)

    def _check_dart(self, dart: Dart) -> None:
        if dart not in self._owner:
            raise CrossfreeNotFoundError(f'Dart {dart} is not in the graph')

    def twin(self, dart: Dart) -> Dart:
        """Return the other half of the edge."""
        self._check_dart(dart)
        return self._twin[dart]

    def owner(self, dart: Dart) -> str:
        """Vertex the dart leaves from."""
        self._check_dart(dart)
        return self._owner[dart]

    def head(self, dart: Dart) -> str:
        """Vertex the dart points to."""
        return self._owner[self.twin(dart)]

    def succ(self, dart: Dart) -> Dart:
        """Next dart counterclockwise at the owner of a dart."""
        darts = self.rotation(self.owner(dart))
        return darts[(self._position[dart] + 1) % len(darts)]

    def pred(self, dart: Dart) -> Dart:
        """Previous dart counterclockwise at the owner of a dart."""
        darts = self.rotation(self.owner(dart))
        return darts[(self._position[dart] - 1) % len(darts)]

    def canonical(self, dart: Dart) -> Dart:
        """Smaller dart of the edge, used as the edge id."""
        return min(dart, self.twin(dart))

    def edges(self) -> List[Dart]:
        """Edge ids (canonical darts) in increasing order."""
        return sorted(d for d in self._owner if d < self._twin[d])

    def endpoints(self, dart: Dart) -> Tuple[str, str]:
        """Owner and head of a dart."""
        return self.owner(dart), self.head(dart)

    def is_loop(self, dart: Dart) -> bool:
        """Check whether both darts of the edge leave the same vertex."""
        return self.owner(dart) == self.head(dart)

    def degree(self, vertex: str) -> int:
        """Number of darts at a vertex, a loop counts twice."""
        return len(self.rotation(vertex))

    def neighbors(self, vertex: str) -> List[str]:
        """Heads of the darts at a vertex in rotation order, with repetition."""
        return [self.head(d) for d in self.rotation(vertex)]

    def adjacent(self, u: str, v: str) -> bool:
        """Check whether some edge joins two distinct vertices."""
        return u != v and self.find_dart(u, v) is not None

    def find_dart(self, u: str, v: str) -> Optional[Dart]:
        """First dart at u, in rotation order, that points to v."""
        for dart in self.rotation(u):
            if self.head(dart) == v:
                return dart
        return None

    def label(self, dart: Dart) -> Optional[str]:
        """Annotation of the edge of a dart."""
        return self._labels.get(self.canonical(dart))

    @property
    def labels(self) -> Dict[Dart, str]:
        """Edge annotations keyed by edge id."""
        return dict(self._labels)

    def next_dart_id(self) -> Dart:
        """Smallest dart id above every dart in use."""
        return max(self._owner) + 1 if self._owner else 0

    def fresh_vertex(self, base: str) -> str:
        """Return base, or base with a numeric suffix, whichever is not yet a vertex id."""
        if base not in self._rotation:
            return base
        suffix = 1
        while f'{base}{const.VERTEX_SEP}{suffix}' in self._rotation:
            suffix += 1
        return f'{base}{const.VERTEX_SEP}{suffix}'

    def components(self, subset: Optional[Collection[str]] = None) -> List[List[str]]:
        """
        Connected components of the subgraph induced on subset (all vertices by default).

        Components are listed by their first vertex in insertion order. Vertices keep insertion order inside them.
        """
        allowed = set(self._rotation) if subset is None else set(subset)
        unknown = allowed.difference(self._rotation)
        if unknown:
            raise CrossfreeNotFoundError(f'Vertices {sorted(unknown)} are not in the graph')
        order = {v: i for i, v in enumerate(self._rotation)}
        seen: Set[str] = set()
        result: List[List[str]] = []
        for start in sorted(allowed, key=order.__getitem__):
            if start in seen:
                continue
            seen.add(start)
            component = [start]
            queue = deque([start])
            while queue:
                current = queue.popleft()
                for dart in self._rotation[current]:
                    nxt = self._owner[self._twin[dart]]
                    if nxt in allowed and nxt not in seen:
                        seen.add(nxt)
                        component.append(nxt)
                        queue.append(nxt)
            result.append(sorted(component, key=order.__getitem__))
        return result

    def is_connected(self, subset: Optional[Collection[str]] = None) -> bool:
        """Check whether the induced subgraph is connected, empty sets count as connected."""
        return len(self.components(subset)) <= 1

    def is_simple(self) -> bool:
        """Check for the absence of loops and parallel edges."""
        pairs: Set[Tuple[str, str]] = set()
        for edge in self.edges():
            u, v = self.endpoints(edge)
            if u == v:
                return False
            key = (u, v) if u < v else (v, u)
            if key in pairs:
                return False
            pairs.add(key)
        return True

    def rotation_names(self) -> Dict[str, List[str]]:
        """Neighbor-name rotations, meaningful for simple graphs."""
        return {v: self.neighbors(v) for v in self._rotation}

    def edge_pairs(self) -> List[Tuple[str, str]]:
        """Endpoint pairs of every edge, ordered by edge id."""
        return [self.endpoints(edge) for edge in self.edges()]

    def _parts(self) -> Tuple[Dict[str, List[Dart]], Dict[Dart, Dart], Dict[Dart, str]]:
        """Mutable copies of the raw maps for the edit operations."""
        return ({v: list(ds) for v, ds in self._rotation.items()}, dict(self._twin), dict(self._labels))

    def __repr__(self) -> str:
        """Return a compact description."""
        return f'EmbeddedGraph(V={self.num_vertices}, E={self.num_edges})'


def face_trace(graph: EmbeddedGraph) -> List[Face]:
    """
    Decompose the darts into faces.

    The face permutation sends a dart d to the rotation successor of twin(d) at the head of d.

    Args:
        graph: a nonempty embedded graph.

    Returns:
        Faces as dart tuples, each starting at its smallest dart. Every dart is in exactly one face.

    Raises:
        EmbeddingError: graph has no vertices.
    """
    if graph.num_vertices == 0:
        raise EmbeddingError('Cannot trace the faces of an empty graph')
    seen: Set[Dart] = set()
    faces: List[Face] = []
    for start in graph.darts():
        if start in seen:
            continue
        face: List[Dart] = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            face.append(dart)
            dart = graph.succ(graph.twin(dart))
        if dart != start:
            raise EmbeddingError(f'Face permutation is not a permutation at dart {start}')
        faces.append(tuple(face))
    return faces


def face_count(graph: EmbeddedGraph) -> int:
    """Number of faces, counting one for every isolated vertex."""
    if graph.num_vertices == 0:
        return 0
    isolated = sum(1 for v in graph.vertices if graph.degree(v) == 0)
    return len(face_trace(graph)) + isolated


def total_genus(graph: EmbeddedGraph) -> int:
    """
    Genus of the given embedding summed over components.

    Returns:
        (2c - V + E - F) / 2 for c components.

    Raises:
        EmbeddingError: the Euler count is odd or negative, which only a corrupt rotation system produces.
    """
    if graph.num_vertices == 0:
        return 0
    doubled = 2 * len(graph.components()) - graph.num_vertices + graph.num_edges - face_count(graph)
    if doubled < 0 or doubled % 2:
        raise EmbeddingError(f'Euler count {doubled} is not a valid doubled genus')
    return doubled // 2


def genus(graph: EmbeddedGraph) -> int:
    """
    Genus of the given embedding of a connected graph, from Euler's formula V - E + F = 2 - 2g.

    Raises:
        EmbeddingError: the graph is empty or disconnected.
    """
    if graph.num_vertices == 0:
        raise EmbeddingError('Genus of an empty graph is undefined')
    if not graph.is_connected():
        raise EmbeddingError('Genus is defined per component, the graph is disconnected')
    return total_genus(graph)


def contract_edge(graph: EmbeddedGraph, dart: Dart) -> EmbeddedGraph:
    """
    Contract the edge of a dart, merging the owner into the head.

    The merged rotation is the owner's darts after the contracted dart, followed by the head's darts after its twin.
    The head keeps its id. Parallel copies of the edge become loops and stay until simplify.

    Raises:
        EmbeddingError: the edge is a loop.
    """
    if graph.is_loop(dart):
        raise EmbeddingError(f'Cannot contract loop {dart} at {graph.owner(dart)}')
    partner = graph.twin(dart)
    absorbed, survivor = graph.owner(dart), graph.owner(partner)
    rotation, twin, labels = graph._parts()
    at_absorbed = rotation.pop(absorbed)
    at_survivor = rotation[survivor]
    i = at_absorbed.index(dart)
    j = at_survivor.index(partner)
    rotation[survivor] = at_absorbed[i + 1:] + at_absorbed[:i] + at_survivor[j + 1:] + at_survivor[:j]
    del twin[dart]
    del twin[partner]
    labels.pop(min(dart, partner), None)
    return EmbeddedGraph(rotation, twin, labels)


def subdivide_edge(graph: EmbeddedGraph, dart: Dart, name: Optional[str] = None) -> Tuple[EmbeddedGraph, str]:
    """
    Subdivide the edge of a dart by a new degree-2 vertex.

    The dart stays at its owner and now points to the new vertex. The new vertex's rotation is (back to the owner,
    on to the old head). Both halves keep the edge label.

    Returns:
        The new graph and the id of the subdividing vertex.
    """
    partner = graph.twin(dart)
    u, v = graph.owner(dart), graph.owner(partner)
    middle = graph.fresh_vertex(name or f'{u}{const.VERTEX_SEP}{v}')
    label = graph.label(dart)
    rotation, twin, labels = graph._parts()
    back, onward = graph.next_dart_id(), graph.next_dart_id() + 1
    rotation[middle] = [back, onward]
    twin[dart], twin[back] = back, dart
    twin[onward], twin[partner] = partner, onward
    labels.pop(min(dart, partner), None)
    if label is not None:
        labels[dart] = label
        labels[partner] = label
    return EmbeddedGraph(rotation, twin, labels), middle


def replace_vertex_with_cycle(
    graph: EmbeddedGraph,
    vertex: str,
    attach: Optional[Sequence[bool]] = None,
    chords: Iterable[Tuple[str, str]] = (),
    cycle_label: str = const.LABEL_CYCLE,
    chord_label: str = const.LABEL_CHORD
) -> Tuple[EmbeddedGraph, List[str]]:
    """
    Remove a vertex and join its neighbors by a cycle drawn in a small disk around it.

    The neighbors must be distinct, which is the case once the incident edges are subdivided. Cycle order follows
    the rotation of the removed vertex. Chords are drawn inside the disk. At each cycle vertex, the single dart
    toward the removed vertex is replaced by: the dart to the next cycle vertex, the chords by increasing cyclic offset
    of their far end, and the dart to the previous cycle vertex. For two neighbors the cycle is one edge. For one
    neighbor it is that vertex alone.

    Args:
        graph: the embedding.
        vertex: the vertex to remove.
        attach: per incident dart, whether its neighbor joins the cycle. Unattached edges are deleted.
        chords: pairs of non-consecutive cycle vertices, pairwise non-crossing.
        cycle_label: label for cycle edges.
        chord_label: label for chord edges.

    Returns:
        The new graph and the cycle vertices in order.

    Raises:
        EmbeddingError: the vertex has degree 0, a loop, repeated neighbors, or a chord is invalid.
    """
    incident = graph.rotation(vertex)
    if not incident:
        raise EmbeddingError(f'Vertex {vertex} has degree 0 and cannot be replaced by a cycle')
    if any(graph.is_loop(d) for d in incident):
        raise EmbeddingError(f'Vertex {vertex} carries a loop, remove loops before replacing it')
    flags = list(attach) if attach is not None else [True] * len(incident)
    if len(flags) != len(incident):
        raise EmbeddingError(f'Expected {len(incident)} attach flags for {vertex}, got {len(flags)}')
    kept = [d for d, flag in zip(incident, flags) if flag]
    cycle = [graph.head(d) for d in kept]
    if len(set(cycle)) != len(cycle):
        raise EmbeddingError(f'Neighbors of {vertex} repeat, subdivide its edges first')
    k = len(cycle)
    index = {name: i for i, name in enumerate(cycle)}

    rotation, twin, labels = graph._parts()
    for dart in incident:
        del twin[dart]
        del twin[graph.twin(dart)]
        labels.pop(graph.canonical(dart), None)
    next_id = graph.next_dart_id()

    def new_edge(label: str) -> Tuple[Dart, Dart]:
        nonlocal next_id
        a, b = next_id, next_id + 1
        next_id += 2
        twin[a], twin[b] = b, a
        labels[a] = label
        return a, b

    replacement: Dict[int, List[Dart]] = {i: [] for i in range(k)}
    if k == 2:
        a, b = new_edge(cycle_label)
        replacement[0], replacement[1] = [a], [b]
    elif k >= 3:
        to_next: Dict[int, Dart] = {}
        to_prev: Dict[int, Dart] = {}
        for i in range(k):
            a, b = new_edge(cycle_label)
            to_next[i], to_prev[(i + 1) % k] = a, b
        fans: Dict[int, List[Tuple[int, Dart]]] = {i: [] for i in range(k)}
        seen: Set[Tuple[int, int]] = set()
        for x, y in chords:
            if x not in index or y not in index:
                raise EmbeddingError(f'Chord ({x}, {y}) does not join two cycle vertices')
            i, j = index[x], index[y]
            if (j - i) % k in (0, 1, k - 1):
                raise EmbeddingError(f'Chord ({x}, {y}) joins consecutive cycle vertices')
            key = (min(i, j), max(i, j))
            if key in seen:
                raise EmbeddingError(f'Chord ({x}, {y}) given twice')
            seen.add(key)
            a, b = new_edge(chord_label)
            fans[i].append(((j - i) % k, a))
            fans[j].append(((i - j) % k, b))
        for i in range(k):
            replacement[i] = [to_next[i]] + [d for _, d in sorted(fans[i])] + [to_prev[i]]
    elif list(chords):
        raise EmbeddingError('A single-vertex cycle has no chords')

    del rotation[vertex]
    for dart in incident:
        other = graph.twin(dart)
        neighbor = graph.owner(other)
        darts = rotation[neighbor]
        position = darts.index(other)
        if dart in kept:
            darts[position:position + 1] = replacement[index[neighbor]]
        else:
            del darts[position]
    return EmbeddedGraph(rotation, twin, labels), cycle


def delete_edges(graph: EmbeddedGraph, darts: Iterable[Dart]) -> EmbeddedGraph:
    """Delete the edges of the given darts, either half may be given."""
    doomed: Set[Dart] = set()
    for dart in darts:
        doomed.add(dart)
        doomed.add(graph.twin(dart))
    if not doomed:
        return graph
    rotation, twin, labels = graph._parts()
    for vertex in rotation:
        rotation[vertex] = [d for d in rotation[vertex] if d not in doomed]
    for dart in doomed:
        del twin[dart]
        labels.pop(dart, None)
    return EmbeddedGraph(rotation, twin, labels)


def delete_edge(graph: EmbeddedGraph, dart: Dart) -> EmbeddedGraph:
    """Delete one edge."""
    return delete_edges(graph, [dart])


def remove_loops(graph: EmbeddedGraph, vertex: Optional[str] = None) -> EmbeddedGraph:
    """Delete every loop, or only the loops at one vertex."""
    loops = [e for e in graph.edges() if graph.is_loop(e) and (vertex is None or graph.owner(e) == vertex)]
    return delete_edges(graph, loops)


def simplify(graph: EmbeddedGraph) -> EmbeddedGraph:
    """
    Remove loops and merge parallel edges.

    Of each bundle of parallel edges the one met first when scanning vertices in order and rotations in order is kept.
    """
    decided: Set[Dart] = set()
    pairs: Set[Tuple[str, str]] = set()
    doomed: List[Dart] = []
    for vertex in graph.vertices:
        for dart in graph.rotation(vertex):
            edge = graph.canonical(dart)
            if edge in decided:
                continue
            decided.add(edge)
            u, v = graph.endpoints(dart)
            key = (u, v) if u < v else (v, u)
            if u == v or key in pairs:
                doomed.append(edge)
            else:
                pairs.add(key)
    if doomed:
        logger.debug(f'Simplify removes {len(doomed)} loops or parallel edges')
    return delete_edges(graph, doomed)


def delete_vertex(graph: EmbeddedGraph, vertex: str) -> EmbeddedGraph:
    """Delete a vertex and its incident edges."""
    trimmed = delete_edges(graph, graph.rotation(vertex))
    rotation, twin, labels = trimmed._parts()
    del rotation[vertex]
    return EmbeddedGraph(rotation, twin, labels)


def add_vertex(graph: EmbeddedGraph, name: str) -> EmbeddedGraph:
    """Add an isolated vertex."""
    if graph.has_vertex(name):
        raise EmbeddingError(f'Vertex {name} already exists')
    rotation, twin, labels = graph._parts()
    rotation[name] = []
    return EmbeddedGraph(rotation, twin, labels)


def add_pendant(
    graph: EmbeddedGraph, at: str, name: str, label: Optional[str] = const.LABEL_PENDANT
) -> EmbeddedGraph:
    """
    Attach a new leaf to a vertex.

    The new dart goes last in the rotation of the attachment vertex, inside one of its face corners, so the genus
    does not change.
    """
    if graph.has_vertex(name):
        raise EmbeddingError(f'Vertex {name} already exists')
    graph.rotation(at)
    rotation, twin, labels = graph._parts()
    a, b = graph.next_dart_id(), graph.next_dart_id() + 1
    rotation[at].append(a)
    rotation[name] = [b]
    twin[a], twin[b] = b, a
    if label is not None:
        labels[a] = label
    return EmbeddedGraph(rotation, twin, labels)


def relabel(graph: EmbeddedGraph, mapping: Mapping[str, str]) -> EmbeddedGraph:
    """
    Rename vertices, ids not in the mapping are kept.

    Raises:
        EmbeddingError: two vertices would share a name.
    """
    rotation, twin, labels = graph._parts()
    renamed = {mapping.get(v, v): darts for v, darts in rotation.items()}
    if len(renamed) != len(rotation):
        raise EmbeddingError('Relabelling merges distinct vertices')
    return EmbeddedGraph(renamed, twin, labels)
