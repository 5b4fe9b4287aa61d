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
"""Tests for crossfree.core.embedding module."""

import random
from typing import Dict, List, Set, Tuple

import pytest

from tests import test_utils

from crossfree.core import const
from crossfree.core.embedding import EmbeddedGraph, add_pendant, add_vertex, contract_edge, delete_vertex, face_count
from crossfree.core.embedding import face_trace, genus, relabel, remove_loops, replace_vertex_with_cycle, simplify
from crossfree.core.embedding import subdivide_edge, total_genus
from crossfree.core.err import CrossfreeNotFoundError, EmbeddingError
from crossfree.core.regions import GridSpec, Topology, grid_graph


def torus_grid(size: int = 3) -> EmbeddedGraph:
    """Square torus grid with the up, right, down, left rotation."""
    return grid_graph(GridSpec(rows=size, cols=size, topology=Topology.torus))


def star() -> EmbeddedGraph:
    """K_{1,4} with leaves a, b, c, d around v."""
    return test_utils.graph({'v': ['a', 'b', 'c', 'd'], 'a': ['v'], 'b': ['v'], 'c': ['v'], 'd': ['v']})


def contract_between(graph: EmbeddedGraph, u: str, v: str) -> EmbeddedGraph:
    """Contract the first edge from u to v."""
    return contract_edge(graph, graph.find_dart(u, v))


def test_single_edge_has_one_face() -> None:
    """A single edge bounds one face of length two."""
    graph = test_utils.graph({'u': ['v'], 'v': ['u']})
    faces = face_trace(graph)
    assert len(faces) == 1
    assert len(faces[0]) == 2
    assert genus(graph) == 0


def test_planar_cycle() -> None:
    """A planar 4-cycle has two faces of length four."""
    graph = test_utils.cycle(4)
    assert [len(face) for face in face_trace(graph)] == [4, 4]
    assert genus(graph) == 0


def test_torus_grid_faces() -> None:
    """The 3x3 torus grid has nine quadrilateral faces and genus one."""
    graph = torus_grid()
    faces = face_trace(graph)
    assert len(faces) == 9
    assert all(len(face) == 4 for face in faces)
    assert graph.num_vertices == 9
    assert graph.num_edges == 18
    assert genus(graph) == 1


def test_cube_is_planar() -> None:
    """The cube rotation has six faces."""
    graph = test_utils.cube()
    assert face_count(graph) == 6
    assert genus(graph) == 0


def test_faces_partition_darts() -> None:
    """Every dart lies in exactly one face."""
    graph = torus_grid(4)
    darts = [d for face in face_trace(graph) for d in face]
    assert sorted(darts) == graph.darts()


def test_genus_rejects_empty_and_disconnected() -> None:
    """Genus is only defined for a connected nonempty graph."""
    with pytest.raises(EmbeddingError):
        genus(EmbeddedGraph.empty())
    two = add_vertex(test_utils.cycle(3), 'lonely')
    with pytest.raises(EmbeddingError):
        genus(two)
    assert total_genus(two) == 0
    assert total_genus(EmbeddedGraph.empty()) == 0


def test_isolated_vertex_counts_a_face() -> None:
    """A lone vertex is a sphere."""
    graph = add_vertex(EmbeddedGraph.empty(), 'x')
    assert face_count(graph) == 1
    assert genus(graph) == 0


def test_from_rotation_errors() -> None:
    """Malformed neighbor rotations are rejected."""
    with pytest.raises(EmbeddingError):
        test_utils.graph({'a': ['b'], 'b': ['a', 'c']})
    with pytest.raises(EmbeddingError):
        test_utils.graph({'a': ['a']})
    with pytest.raises(EmbeddingError):
        test_utils.graph({'a': ['b', 'b'], 'b': ['a']})
    with pytest.raises(EmbeddingError):
        test_utils.graph({'a': ['b'], 'b': [], 'c': []})


def test_constructor_errors() -> None:
    """Twin maps must be involutions over the darts in use."""
    with pytest.raises(EmbeddingError):
        EmbeddedGraph({'a': [0], 'b': [1]}, {0: 1})
    with pytest.raises(EmbeddingError):
        EmbeddedGraph({'a': [0]}, {0: 0})
    with pytest.raises(EmbeddingError):
        EmbeddedGraph({'a': [0], 'b': [0]}, {0: 0})
    with pytest.raises(EmbeddingError):
        EmbeddedGraph({'a': [0, 2], 'b': [1]}, {0: 1, 1: 2, 2: 0})


def test_queries() -> None:
    """Accessors agree with the rotation they were built from."""
    graph = test_utils.cube()
    assert graph.neighbors('a') == ['b', 'e', 'd']
    assert graph.degree('a') == 3
    assert graph.adjacent('a', 'b')
    assert not graph.adjacent('a', 'g')
    dart = graph.find_dart('a', 'b')
    assert graph.endpoints(dart) == ('a', 'b')
    assert graph.head(graph.twin(dart)) == 'a'
    assert graph.succ(graph.pred(dart)) == dart
    assert graph.canonical(dart) == graph.canonical(graph.twin(dart))
    assert len(graph.edges()) == 12
    assert graph.is_simple()
    assert graph.rotation_names() == test_utils.CUBE_ROTATION
    with pytest.raises(CrossfreeNotFoundError):
        graph.rotation('z')
    with pytest.raises(CrossfreeNotFoundError):
        graph.twin(1000)


def test_components_and_fresh_names() -> None:
    """Components follow insertion order, fresh names get numeric suffixes."""
    graph = test_utils.path(5)
    assert graph.components(['p0', 'p1', 'p3', 'p4']) == [['p0', 'p1'], ['p3', 'p4']]
    assert graph.is_connected(['p1', 'p2', 'p3'])
    assert graph.is_connected([])
    assert graph.fresh_vertex('q') == 'q'
    assert graph.fresh_vertex('p0') == f'p0{const.VERTEX_SEP}1'
    with pytest.raises(CrossfreeNotFoundError):
        graph.components(['nope'])


def test_contract_triangle_edge() -> None:
    """Contracting a triangle edge leaves two vertices joined by parallel edges."""
    graph = contract_between(test_utils.cycle(3), 'x0', 'x1')
    assert graph.vertices == ['x1', 'x2']
    assert graph.num_edges == 2
    assert not graph.is_simple()
    assert total_genus(graph) == 0
    simple = simplify(graph)
    assert simple.num_edges == 1
    assert simple.is_simple()


def test_contract_torus_edges_keeps_genus() -> None:
    """Contracting any single edge of the torus grid keeps genus one."""
    graph = torus_grid()
    for edge in graph.edges():
        assert genus(contract_edge(graph, edge)) == 1


def test_contract_spanning_tree_of_cube() -> None:
    """Contracting a spanning tree of the cube leaves one vertex with five loops on the sphere."""
    graph = test_utils.cube()
    while graph.num_vertices > 1:
        edge = next(e for e in graph.edges() if not graph.is_loop(e))
        graph = contract_edge(graph, edge)
    assert graph.num_edges == 5
    assert all(graph.is_loop(e) for e in graph.edges())
    assert genus(graph) == 0
    assert remove_loops(graph).num_edges == 0


def test_contract_loop_fails() -> None:
    """Loops cannot be contracted."""
    graph = contract_between(test_utils.cycle(3), 'x0', 'x1')
    graph = contract_between(graph, 'x1', 'x2')
    with pytest.raises(EmbeddingError):
        contract_edge(graph, graph.edges()[0])


def test_subdivide() -> None:
    """Subdivision keeps the genus and names the new vertex after its ends."""
    graph, middle = subdivide_edge(test_utils.graph({'u': ['v'], 'v': ['u']}), 0)
    assert middle == f'u{const.VERTEX_SEP}v'
    assert graph.neighbors(middle) == ['u', 'v']
    assert graph.num_edges == 2
    assert genus(graph) == 0

    triangle = test_utils.cycle(3)
    for edge in triangle.edges():
        triangle, _ = subdivide_edge(triangle, edge)
    assert triangle.num_vertices == 6
    assert all(triangle.degree(v) == 2 for v in triangle.vertices)
    assert genus(triangle) == 0

    torus, _ = subdivide_edge(torus_grid(), 0, name='w')
    assert torus.has_vertex('w')
    assert genus(torus) == 1


def test_replace_star_center() -> None:
    """The subdivided star center becomes a 4-cycle with four pendant leaves."""
    graph = star()
    for dart in graph.rotation('v'):
        graph, _ = subdivide_edge(graph, dart)
    graph, cycle = replace_vertex_with_cycle(graph, 'v')
    assert len(cycle) == 4
    assert not graph.has_vertex('v')
    assert graph.num_vertices == 8
    assert graph.num_edges == 8
    assert all(graph.degree(u) == 3 for u in cycle)
    assert all(graph.degree(leaf) == 1 for leaf in 'abcd')
    assert genus(graph) == 0
    assert sorted(graph.label(e) for e in graph.edges() if graph.label(e)) == [const.LABEL_CYCLE] * 4


def test_replace_degree_one_vertex() -> None:
    """A degree-one vertex becomes its only neighbor."""
    graph, cycle = replace_vertex_with_cycle(test_utils.path(2), 'p0')
    assert cycle == ['p1']
    assert graph.vertices == ['p1']
    assert graph.num_edges == 0
    assert genus(graph) == 0


def test_replace_torus_vertex() -> None:
    """Replacing a degree-four torus grid vertex keeps genus one."""
    graph = torus_grid()
    graph, cycle = replace_vertex_with_cycle(graph, 'r1c1')
    assert cycle == ['r0c1', 'r1c2', 'r2c1', 'r1c0']
    assert genus(graph) == 1


def test_replace_with_chords() -> None:
    """Non-crossing chords inside the disk keep the genus."""
    wheel = {'h': [f'x{i}' for i in range(6)]}
    for i in range(6):
        wheel[f'x{i}'] = [f'x{(i + 1) % 6}', 'h', f'x{(i - 1) % 6}']
    graph = test_utils.graph(wheel)
    for dart in graph.rotation('h'):
        graph, _ = subdivide_edge(graph, dart)
    middles = graph.neighbors('h')
    graph, cycle = replace_vertex_with_cycle(graph, 'h', chords=[(middles[0], middles[3]), (middles[0], middles[2])])
    assert cycle == middles
    assert genus(graph) == 0
    chords = [e for e in graph.edges() if graph.label(e) == const.LABEL_CHORD]
    assert len(chords) == 2


def test_replace_errors() -> None:
    """Bad chords, repeated neighbors and isolated vertices are refused."""
    wheel = star()
    with pytest.raises(EmbeddingError):
        replace_vertex_with_cycle(wheel, 'v', chords=[('a', 'b')])
    with pytest.raises(EmbeddingError):
        replace_vertex_with_cycle(wheel, 'v', chords=[('a', 'z')])
    with pytest.raises(EmbeddingError):
        replace_vertex_with_cycle(wheel, 'v', chords=[('a', 'c'), ('c', 'a')])
    with pytest.raises(EmbeddingError):
        replace_vertex_with_cycle(add_vertex(wheel, 'z'), 'z')
    parallel = contract_between(test_utils.cycle(3), 'x0', 'x1')
    with pytest.raises(EmbeddingError):
        replace_vertex_with_cycle(parallel, 'x1')


def test_pendant_delete_and_relabel() -> None:
    """Small edits keep the graph consistent."""
    graph = add_pendant(test_utils.cycle(4), 'x0', 'leaf')
    assert graph.rotation_names()['x0'][-1] == 'leaf'
    assert genus(graph) == 0
    assert graph.label(graph.find_dart('x0', 'leaf')) == const.LABEL_PENDANT
    with pytest.raises(EmbeddingError):
        add_pendant(graph, 'x0', 'leaf')
    smaller = delete_vertex(graph, 'x1')
    assert smaller.num_vertices == 4
    assert smaller.num_edges == 3
    renamed = relabel(smaller, {'leaf': 'L'})
    assert renamed.has_vertex('L')
    with pytest.raises(EmbeddingError):
        relabel(smaller, {'leaf': 'x0'})


def test_edits_leave_input_untouched() -> None:
    """Graphs are values."""
    graph = test_utils.cube()
    contract_edge(graph, 0)
    subdivide_edge(graph, 0)
    assert graph.rotation_names() == test_utils.CUBE_ROTATION


def random_embedding(rng: random.Random, n: int) -> EmbeddedGraph:
    """Connected simple graph on v0..v(n-1) with shuffled rotations."""
    names = [f'v{i}' for i in range(n)]
    adjacency: Dict[str, Set[str]] = {name: set() for name in names}
    for i in range(1, n):
        j = rng.randrange(i)
        adjacency[names[i]].add(names[j])
        adjacency[names[j]].add(names[i])
    for _ in range(rng.randint(0, n)):
        u, v = rng.sample(names, 2)
        adjacency[u].add(v)
        adjacency[v].add(u)
    rotation: Dict[str, List[str]] = {}
    for name in names:
        rotation[name] = sorted(adjacency[name])
        rng.shuffle(rotation[name])
    return EmbeddedGraph.from_rotation(rotation)


def normalized(faces: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Faces as dart cycles started at their smallest dart, sorted."""
    result = []
    for face in faces:
        if face:
            i = face.index(min(face))
            result.append(tuple(face[i:] + face[:i]))
    return sorted(result)


def assert_partition(graph: EmbeddedGraph) -> None:
    """Faces cover every dart exactly once."""
    darts = [d for face in face_trace(graph) for d in face]
    assert sorted(darts) == graph.darts()
    assert total_genus(graph) >= 0


def test_random_edit_sequences() -> None:
    """Faces stay a partition under edits, contraction never raises the genus and the other edits keep it."""
    rng = random.Random(41)
    edits = {'contract': 0, 'subdivide': 0, 'replace': 0}
    for _ in range(60):
        graph = random_embedding(rng, rng.randint(5, 40))
        assert_partition(graph)
        for _ in range(6):
            before = genus(graph)
            edges = [e for e in graph.edges() if not graph.is_loop(e)]
            edit = rng.choice(sorted(edits))
            if edit == 'contract' and graph.num_edges > 1 and edges:
                dart = rng.choice(edges)
                expected = normalized(
                    [tuple(d for d in face if d not in (dart, graph.twin(dart))) for face in face_trace(graph)]
                )
                graph = contract_edge(graph, dart)
                assert normalized(face_trace(graph)) == expected
                assert genus(graph) <= before
            elif edit == 'subdivide' and edges:
                graph, _ = subdivide_edge(graph, rng.choice(edges))
                assert genus(graph) == before
            else:
                edit = 'replace'
                candidates = [
                    v for v in graph.vertices
                    if graph.degree(v) > 0 and not any(graph.is_loop(d) for d in graph.rotation(v))
                ]
                if not candidates:
                    continue
                vertex = rng.choice(candidates)
                for dart in graph.rotation(vertex):
                    graph, _ = subdivide_edge(graph, dart)
                graph, _ = replace_vertex_with_cycle(graph, vertex)
                assert genus(graph) == before
            assert_partition(graph)
            edits[edit] += 1
    assert all(count > 0 for count in edits.values())


def test_random_trees_are_planar() -> None:
    """Any rotation of a tree has a single face walking every edge twice."""
    rng = random.Random(43)
    for _ in range(100):
        n = rng.randint(2, 40)
        rotation: Dict[str, List[str]] = {f'v{i}': [] for i in range(n)}
        for i in range(1, n):
            parent = f'v{rng.randrange(i)}'
            rotation[f'v{i}'].append(parent)
            rotation[parent].insert(rng.randint(0, len(rotation[parent])), f'v{i}')
        graph = EmbeddedGraph.from_rotation(rotation)
        faces = face_trace(graph)
        assert len(faces) == 1
        assert len(faces[0]) == 2 * (n - 1)
        assert genus(graph) == 0
