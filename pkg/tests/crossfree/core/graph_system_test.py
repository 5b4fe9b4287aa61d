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
"""Tests for crossfree.core.graph_system module."""

import itertools
import random

import pytest

from crossfree.core import const
from crossfree.core.embedding import EmbeddedGraph, genus
from crossfree.core.err import CrossfreeNotFoundError, CrossfreeValidationError
from crossfree.core.graph_system import Color, GraphSystem, adjacent_twins, crossing_at_vertex, depth_profile
from crossfree.core.graph_system import is_cross_free, is_cross_free_at, is_non_piercing, maximal_vertices
from crossfree.core.graph_system import reduced_graph, twins
from crossfree.core.regions import GridSpec, Topology, grid_graph, random_region_system
from crossfree.core.supports import dual_support, intersection_support

from tests import test_utils


def test_system_construction_errors() -> None:
    """Members must name host vertices, be connected and be fully colored."""
    host = test_utils.path(3)
    with pytest.raises(CrossfreeValidationError):
        GraphSystem(host, {'H1': ['p0', 'zz']})
    with pytest.raises(CrossfreeValidationError):
        GraphSystem(host, {'H1': ['p0', 'p2']})
    with pytest.raises(CrossfreeValidationError):
        GraphSystem(host, {'H1': []})
    with pytest.raises(CrossfreeValidationError):
        GraphSystem(host, {'H1': ['p0']}, coloring={'p0': Color.blue})
    with pytest.raises(CrossfreeValidationError):
        test_utils.load_fixture('disconnected_member.yaml')
    unchecked = GraphSystem(host, {'H1': ['p0', 'p2']}, validate=False)
    assert unchecked.H['H1'] == frozenset({'p0', 'p2'})


def test_system_queries(fig2_system: GraphSystem) -> None:
    """Lookups by vertex, edge and family."""
    assert fig2_system.scopes() == [const.FAMILY_H]
    assert fig2_system.members_at('a') == frozenset({'H1', 'H3', 'H4'})
    assert fig2_system.members_at('f') == frozenset({'H3'})
    edge = fig2_system.host.find_dart('c', 'e')
    assert fig2_system.members_on_edge(edge) == frozenset({'H2', 'H4'})
    assert fig2_system.color('a') == Color.blue
    assert not fig2_system.is_k_vertex('a')
    with pytest.raises(CrossfreeNotFoundError):
        fig2_system.family(const.FAMILY_K)
    with pytest.raises(CrossfreeNotFoundError):
        fig2_system.members_at('zz')
    with pytest.raises(CrossfreeNotFoundError):
        fig2_system.members_at('a', const.FAMILY_K)
    assert 'GraphSystem(V=6, E=6' in repr(fig2_system)


def test_intersection_system_queries(fig2_intersection: GraphSystem) -> None:
    """K vertices lie in K but in no H member."""
    assert fig2_intersection.scopes() == [const.FAMILY_H, const.FAMILY_K]
    assert fig2_intersection.members_at('d', const.FAMILY_K) == frozenset({'K1', 'K3'})
    assert fig2_intersection.is_k_vertex('d') is False
    stripped = fig2_intersection.without_k()
    assert stripped.K is None
    assert stripped.H == fig2_intersection.H


def test_with_replaces_parts(fig2_system: GraphSystem) -> None:
    """Copies share untouched parts."""
    smaller = fig2_system.with_(H={'H1': ['a', 'b']})
    assert smaller.host is fig2_system.host
    assert list(smaller.H) == ['H1']
    assert fig2_system.H['H1'] == frozenset({'a', 'b', 'c', 'd'})


def test_reduced_graph(fig2_system: GraphSystem) -> None:
    """The common part of two members collapses to one vertex."""
    reduced, origin = reduced_graph(fig2_system, 'H1', 'H4')
    assert len({origin[v] for v in 'abc'}) == 1
    assert reduced.num_vertices == 4
    assert reduced.num_edges == 4
    assert origin['d'] == 'd'


def test_star_cross_free(star: GraphSystem) -> None:
    """Leaves in separate arcs do not cross."""
    assert is_cross_free(star) == (True, None)
    assert is_cross_free_at(star, 'H1', 'H2', 'v') == (True, None)


def test_star_crossing() -> None:
    """Interleaved leaves give a four dart witness at the center."""
    system = test_utils.load_fixture(test_utils.STAR_CROSSING)
    free, witness = is_cross_free(system)
    assert not free
    assert witness.vertex == 'v'
    assert witness.members == ('H1', 'H2')
    assert witness.neighbors == ['a', 'c', 'b', 'd']
    assert len(witness.darts) == 4
    assert crossing_at_vertex(system, 'v', [const.FAMILY_H]) == witness
    assert crossing_at_vertex(system, 'a', [const.FAMILY_H]) is None


def test_nested_members_never_cross() -> None:
    """A member inside another is cross-free with it."""
    host = test_utils.graph({'v': ['a', 'c', 'b', 'd'], 'a': ['v'], 'b': ['v'], 'c': ['v'], 'd': ['v']})
    system = GraphSystem(host, {'H1': ['v', 'a', 'b', 'c', 'd'], 'H2': ['v', 'c', 'd']})
    assert is_cross_free(system)[0]


def test_torus_cycles_cross(torus_cycles: GraphSystem) -> None:
    """Row and column cycles of a torus pierce nothing but cross at every cell."""
    assert is_non_piercing(torus_cycles) == (True, None)
    free, witness = is_cross_free(torus_cycles)
    assert not free
    assert witness.vertex == 'r0c0'
    assert witness.members == ('col0', 'row0')
    assert len(witness.darts) == 4
    assert set(witness.neighbors) == {'r2c0', 'r0c1', 'r1c0', 'r0c2'}


def test_fig2_structure(fig2_system: GraphSystem) -> None:
    """The incidence example is cross-free and non-piercing."""
    assert is_cross_free(fig2_system) == (True, None)
    assert is_non_piercing(fig2_system) == (True, None)


def test_intersection_scans(fig2_intersection: GraphSystem) -> None:
    """H and K are each cross-free."""
    assert is_cross_free(fig2_intersection, const.FAMILY_H)[0]
    assert is_cross_free(fig2_intersection, const.FAMILY_K)[0]
    assert is_cross_free(fig2_intersection)[0]


def test_piercing_witness() -> None:
    """A member splitting another reports the pieces."""
    system = GraphSystem(test_utils.path(5), {'H1': ['p0', 'p1', 'p2', 'p3', 'p4'], 'H2': ['p2']})
    ok, witness = is_non_piercing(system)
    assert not ok
    assert witness.members == ('H1', 'H2')
    assert sorted(sorted(c) for c in witness.components) == [['p0', 'p1'], ['p3', 'p4']]


def test_depths_and_maximal(fig2_system: GraphSystem) -> None:
    """Depth counts memberships and maximal vertices beat every incident edge."""
    host = fig2_system.host
    profile = depth_profile(fig2_system)
    assert profile.vertex_depth == {'a': 3, 'b': 3, 'c': 3, 'd': 2, 'e': 3, 'f': 1}
    assert profile.edge_depth[host.canonical(host.find_dart('a', 'b'))] == 3
    assert profile.edge_depth[host.canonical(host.find_dart('e', 'f'))] == 1
    assert maximal_vertices(fig2_system) == ['c', 'e']
    assert maximal_vertices(fig2_system, color=Color.red) == []
    assert maximal_vertices(fig2_system, among=['e', 'f']) == ['e']


def test_twins(fig2_system: GraphSystem) -> None:
    """The two pendant-side vertices a and b lie in the same members."""
    assert twins(fig2_system) == [['a', 'b']]
    edges = adjacent_twins(fig2_system)
    assert [fig2_system.host.endpoints(e) for e in edges] in ([('a', 'b')], [('b', 'a')])
    assert adjacent_twins(fig2_system, color=Color.red) == []


def shifted(graph: EmbeddedGraph, seed: int) -> EmbeddedGraph:
    """The same embedding with every rotation list started at a random neighbor."""
    rng = random.Random(seed)
    rotation = {}
    for vertex, neighbors in graph.rotation_names().items():
        offset = rng.randrange(len(neighbors)) if neighbors else 0
        rotation[vertex] = neighbors[offset:] + neighbors[:offset]
    return EmbeddedGraph.from_rotation(rotation)


def test_column_cycle_common_part_has_one_verdict() -> None:
    """Two members sharing a torus column get the same verdict at every vertex of the column."""
    grid = GridSpec(rows=3, cols=3, topology=Topology.torus)
    family = {
        'H0': ['r0c1', 'r0c2', 'r1c2', 'r2c1', 'r2c2'],
        'H1': ['r0c2', 'r1c1', 'r1c2', 'r2c0', 'r2c2'],
        'H2': ['r0c1', 'r1c1', 'r1c2']
    }
    system = GraphSystem(grid_graph(grid), family)
    free, _ = is_cross_free(system)
    assert free
    verdicts = [is_cross_free_at(system, 'H0', 'H1', vertex) for vertex in ('r0c2', 'r1c2', 'r2c2')]
    assert verdicts == [(True, None)] * 3
    for vertex in system.host.vertices:
        assert crossing_at_vertex(system, vertex, [const.FAMILY_H]) is None
    result, _ = dual_support(system)
    test_utils.assert_valid_support(result, system)
    with_k = GraphSystem(system.host, family, {f'K{v}': [v] for v in system.host.vertices})
    test_utils.assert_valid_support(intersection_support(with_k), with_k)


@pytest.mark.parametrize('topology', [Topology.plane, Topology.torus])
def test_cross_free_at_is_symmetric_and_anchor_free(topology: Topology) -> None:
    """Swapping the pair, moving along the common part or restarting rotations never changes a verdict."""
    grid = GridSpec(rows=5, cols=5, topology=topology)
    checked = 0
    for seed in range(40):
        system, _ = random_region_system(grid, count=4, seed=seed, max_size=9)
        moved = GraphSystem(shifted(system.host, seed), system.H)
        for first, second in itertools.combinations(sorted(system.H), 2):
            common = system.H[first] & system.H[second]
            for component in system.host.components(common):
                free, witness = is_cross_free_at(system, first, second, component[0])
                for vertex in component:
                    assert is_cross_free_at(system, first, second, vertex) == (free, witness)
                    assert is_cross_free_at(system, second, first, vertex)[0] == free
                    assert is_cross_free_at(moved, first, second, vertex)[0] == free, f'seed {seed}'
                checked += 1
        assert is_cross_free(moved)[0] == is_cross_free(system)[0]
    assert checked > 0


@pytest.mark.parametrize('topology', [Topology.plane, Topology.torus])
def test_reduced_graph_never_raises_genus(topology: Topology) -> None:
    """Contracting a common part and dropping loops keeps the genus at most the host genus."""
    grid = GridSpec(rows=4, cols=4, topology=topology)
    for seed in range(25):
        system, _ = random_region_system(grid, count=3, seed=seed, max_size=8)
        for first, second in itertools.combinations(sorted(system.H), 2):
            reduced, origin = reduced_graph(system, first, second)
            assert genus(reduced) <= genus(system.host)
            assert set(origin.values()) == set(reduced.vertices)
            assert len({origin[v] for v in system.H[first] & system.H[second]}) <= len(
                system.host.components(system.H[first] & system.H[second])
            )


def test_reduced_graph_of_row_and_column(torus_cycles: GraphSystem) -> None:
    """A row and a column of the torus meet in one vertex, so nothing is contracted."""
    reduced, origin = reduced_graph(torus_cycles, 'row0', 'col0')
    assert reduced.num_vertices == torus_cycles.host.num_vertices
    assert reduced.num_edges == torus_cycles.host.num_edges
    assert reduced.rotation_names() == torus_cycles.host.rotation_names()
    assert all(origin[v] == v for v in torus_cycles.host.vertices)
    assert genus(reduced) == 1
