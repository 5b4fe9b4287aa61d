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
Support predicates, genus certification and exhaustive oracles.

Everything here works on networkx graphs or on the public accessors of an embedding, so that none of the graph
walking used by the constructions is reused to check them.
"""

import itertools
import logging
import math
from typing import Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from pydantic import root_validator

from crossfree.core import const
from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.embedding import EmbeddedGraph
from crossfree.core.err import CrossfreeValidationError, OracleSizeError
from crossfree.core.graph_system import Color, GraphSystem

logger = logging.getLogger(__name__)

Candidate = Union[EmbeddedGraph, nx.Graph]
Verdict = Tuple[bool, Optional[str]]


class Hypergraph(CrossfreeBaseModel):
    """A ground set and named hyperedges over it."""

    ground: List[str]
    edges: Dict[str, List[str]] = {}
    mode: Optional[str] = None

    @root_validator(skip_on_failure=True)
    def _edges_in_ground(cls, values):
        ground = set(values['ground'])
        for name, members in values['edges'].items():
            stray = set(members).difference(ground)
            if stray:
                raise ValueError(f'hyperedge {name} has elements {sorted(stray)} outside the ground set')
        return values

    def edge_sets(self) -> Dict[str, FrozenSet[str]]:
        """Hyperedges as frozen sets."""
        return {name: frozenset(members) for name, members in self.edges.items()}


def extract_hypergraph(system: GraphSystem, mode: str) -> Hypergraph:
    """
    Read the primal, dual or intersection hypergraph off a system.

    Primal: ground = blue vertices, one hyperedge per H member. Dual: ground = H members, one hyperedge per host vertex.
    Intersection: ground = H members, one hyperedge per K member holding the H members it meets.

    Raises:
        CrossfreeValidationError: primal without a coloring, intersection without K, or an unknown mode.
    """
    host = system.host
    if mode == const.MODE_PRIMAL:
        if system.coloring is None:
            raise CrossfreeValidationError('The primal hypergraph needs a coloring')
        blue = [v for v in host.vertices if system.coloring[v] == Color.blue]
        edges = {name: [v for v in blue if v in members] for name, members in system.H.items()}
        return Hypergraph(ground=blue, edges=edges, mode=mode)
    if mode == const.MODE_DUAL:
        edges = {v: sorted(name for name, members in system.H.items() if v in members) for v in host.vertices}
        return Hypergraph(ground=sorted(system.H), edges=edges, mode=mode)
    if mode == const.MODE_INTERSECTION:
        if system.K is None:
            raise CrossfreeValidationError('The intersection hypergraph needs a K family')
        edges = {
            k_name: sorted(h_name for h_name, h_members in system.H.items() if h_members & k_members)
            for k_name, k_members in system.K.items()
        }
        return Hypergraph(ground=sorted(system.H), edges=edges, mode=mode)
    raise CrossfreeValidationError(f'Unknown hypergraph mode {mode}')


def as_networkx(candidate: Candidate) -> nx.Graph:
    """Simple undirected view of a candidate, loops and parallel edges dropped."""
    if isinstance(candidate, nx.Graph):
        return candidate
    graph = nx.Graph()
    graph.add_nodes_from(candidate.vertices)
    graph.add_edges_from((u, v) for u, v in candidate.edge_pairs() if u != v)
    return graph


def graph_from_edges(vertices: Iterable[str], edges: Iterable[Sequence[str]]) -> nx.Graph:
    """Build a candidate from an explicit edge list."""
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from((u, v) for u, v in edges if u != v)
    return graph


def _prepare(candidate: Candidate, hg: Hypergraph) -> nx.Graph:
    graph = as_networkx(candidate)
    for name, members in hg.edges.items():
        missing = [x for x in members if x not in graph]
        if missing:
            raise CrossfreeValidationError(f'Hyperedge {name} has elements {missing} missing from the candidate')
    return graph


def is_support(candidate: Candidate, hg: Hypergraph) -> Verdict:
    """
    Check that every hyperedge induces a connected subgraph.

    Returns:
        (True, None) or (False, name of the first failing hyperedge).
    """
    graph = _prepare(candidate, hg)
    for name, members in hg.edges.items():
        if len(members) > 1 and not nx.is_connected(graph.subgraph(members)):
            return False, name
    return True, None


def is_weak_support(candidate: Candidate, hg: Hypergraph) -> Verdict:
    """Check that every hyperedge with two or more elements induces at least one edge."""
    graph = _prepare(candidate, hg)
    for name, members in hg.edges.items():
        if len(members) > 1 and graph.subgraph(members).number_of_edges() == 0:
            return False, name
    return True, None


def is_weak_bipartite_support(candidate: Candidate, hg: Hypergraph, coloring: Mapping[str, Hashable]) -> Verdict:
    """Check that every hyperedge holding two colors induces an edge joining two differently colored elements."""
    graph = _prepare(candidate, hg)
    for name, members in hg.edges.items():
        colors = {_color_of(coloring, x) for x in members}
        if len(colors) < 2:
            continue
        if not any(coloring[u] != coloring[v] for u, v in graph.subgraph(members).edges()):
            return False, name
    return True, None


def _color_of(coloring: Mapping[str, Hashable], element: str) -> Hashable:
    try:
        return coloring[element]
    except KeyError:
        raise CrossfreeValidationError(f'Element {element} has no color')


def check_no_monochromatic(hg: Hypergraph, coloring: Mapping[str, Hashable]) -> Verdict:
    """
    Check that every hyperedge with two or more elements carries two colors.

    Raises:
        CrossfreeValidationError: some ground element is uncolored.
    """
    for element in hg.ground:
        _color_of(coloring, element)
    for name, members in hg.edges.items():
        if len(members) > 1 and len({coloring[x] for x in members}) < 2:
            return False, name
    return True, None


def is_simple(candidate: EmbeddedGraph) -> bool:
    """Check an embedding for loops and parallel edges."""
    pairs = [frozenset(pair) for pair in candidate.edge_pairs()]
    return all(len(pair) == 2 for pair in pairs) and len(set(pairs)) == len(pairs)


def certify_genus(candidate: EmbeddedGraph) -> int:
    """
    Genus of the carried embedding, summed over components, from a fresh face count.

    Isolated vertices count as one face each.
    """
    if candidate.num_vertices == 0:
        return 0
    darts = [d for v in candidate.vertices for d in candidate.rotation(v)]
    seen = set()
    faces = 0
    for start in darts:
        if start in seen:
            continue
        faces += 1
        dart = start
        while dart not in seen:
            seen.add(dart)
            back = candidate.twin(dart)
            ring = candidate.rotation(candidate.owner(back))
            dart = ring[(ring.index(back) + 1) % len(ring)]
    faces += sum(1 for v in candidate.vertices if not candidate.rotation(v))
    components = nx.number_connected_components(as_networkx(candidate))
    doubled = 2 * components - candidate.num_vertices + len(darts) // 2 - faces
    return doubled // 2


def check_special_edges(system: GraphSystem, support: Candidate) -> Verdict:
    """
    Check the special-edge property of a dual support.

    A special edge is a host edge lying in no member whose two ends each lie in some member. The property holds when
    for every special edge some member at one end is adjacent in the support to some member at the other end.

    Returns:
        (True, None) or (False, the first failing host edge written u-v).
    """
    graph = as_networkx(support)
    at: Dict[str, List[str]] = {v: sorted(n for n, m in system.H.items() if v in m) for v in system.host.vertices}
    for u, v in system.host.edge_pairs():
        if u == v or not at[u] or not at[v] or set(at[u]) & set(at[v]):
            continue
        if not any(graph.has_edge(a, b) for a in at[u] for b in at[v] if a in graph and b in graph):
            return False, f'{u}-{v}'
    return True, None


def _faces_of(rotation: Mapping[Hashable, Sequence[Hashable]]) -> int:
    """Face count of a simple graph's neighbor rotation system."""
    seen = set()
    faces = 0
    for u, ring in rotation.items():
        for v in ring:
            if (u, v) in seen:
                continue
            faces += 1
            x, y = u, v
            while (x, y) not in seen:
                seen.add((x, y))
                around = rotation[y]
                x, y = y, around[(around.index(x) + 1) % len(around)]
    return faces


def _component_genus_at_most(graph: nx.Graph, budget: int, cap: int) -> Optional[int]:
    """Smallest genus of a connected graph if it is at most budget, else None."""
    n, m = graph.number_of_nodes(), graph.number_of_edges()
    if m == 0 or nx.check_planarity(graph)[0]:
        return 0
    if budget == 0 or (n >= 3 and m > 3 * n - 6 + 6 * budget):
        return None
    nodes = list(graph.nodes())
    rings = []
    total = 1
    for node in nodes:
        neighbors = sorted(graph.neighbors(node), key=str)
        rings.append([(neighbors[0], ) + rest for rest in itertools.permutations(neighbors[1:])])
        total *= math.factorial(len(neighbors) - 1)
    if total > cap:
        raise OracleSizeError(f'{total} rotation systems exceed the oracle cap of {cap}')
    best = None
    for choice in itertools.product(*rings):
        faces = _faces_of(dict(zip(nodes, choice)))
        genus = (2 - n + m - faces) // 2
        if best is None or genus < best:
            best = genus
            if best <= 1:
                break
    return best if best is not None and best <= budget else None


def minimum_genus_at_most(graph: nx.Graph, budget: int, cap: int = 2000000) -> bool:
    """Check whether a simple graph embeds on the orientable surface of genus budget."""
    remaining = budget
    for nodes in nx.connected_components(graph):
        found = _component_genus_at_most(graph.subgraph(nodes).copy(), remaining, cap)
        if found is None:
            return False
        remaining -= found
    return True


def brute_force_support_exists(hg: Hypergraph,
                               genus_budget: int,
                               max_vertices: int = 8,
                               max_rotation_systems: int = 2000000) -> bool:
    """
    Decide by exhaustive search whether the hypergraph has a support of genus at most the budget.

    Only pairs sharing a hyperedge are candidate edges. Supports are closed under adding edges and genus cannot drop
    when edges are added, so branches stop at the first support they reach.

    Raises:
        OracleSizeError: more than max_vertices ground elements, or too many rotation systems to enumerate.
    """
    if len(hg.ground) > max_vertices:
        raise OracleSizeError(f'Ground set of {len(hg.ground)} exceeds the oracle limit of {max_vertices}')
    sets = [frozenset(m) for m in hg.edges.values() if len(m) > 1]
    pairs = sorted({tuple(sorted(p)) for members in sets for p in itertools.combinations(members, 2)})

    def support(edges: Iterable[Tuple[str, str]]) -> bool:
        return is_support(graph_from_edges(hg.ground, edges), hg)[0]

    def fits(edges: Sequence[Tuple[str, str]]) -> bool:
        return minimum_genus_at_most(graph_from_edges(hg.ground, edges), genus_budget, max_rotation_systems)

    def search(index: int, chosen: List[Tuple[str, str]]) -> bool:
        if support(chosen):
            return fits(chosen)
        if index == len(pairs) or not support(chosen + pairs[index:]):
            return False
        chosen.append(pairs[index])
        if fits(chosen) and search(index + 1, chosen):
            return True
        chosen.pop()
        return search(index + 1, chosen)

    found = search(0, [])
    logger.debug(f'Support oracle over {len(pairs)} candidate edges at genus {genus_budget}: {found}')
    return found
