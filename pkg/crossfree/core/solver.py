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
Local-search packing and covering over hypergraphs, and coloring along a support.

A solution is a set of hyperedge names or of ground elements depending on the problem. Local search moves by k-swaps:
a minimization swap removes up to k chosen items and adds fewer, a maximization swap adds up to k and removes fewer.
"""

import itertools
import logging
import math
import random
from enum import Enum
from typing import Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from pydantic import PositiveInt, root_validator

from crossfree.core import const
from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.config import SolverSettings
from crossfree.core.embedding import EmbeddedGraph
from crossfree.core.err import ContractViolation, InfeasibleInstanceError, OracleSizeError, StepBudgetExhausted
from crossfree.core.verify import Hypergraph, as_networkx, check_no_monochromatic

logger = logging.getLogger(__name__)

LocalSearchConfig = SolverSettings


class ProblemKind(str, Enum):
    """Packing and covering problems on a hypergraph (X, S)."""

    set_cover = 'set_cover'
    hitting_set = 'hitting_set'
    generalized_cover = 'generalized_cover'
    capacitated_packing = 'capacitated_packing'
    dominating_set = 'dominating_set'
    independent_set = 'independent_set'
    set_packing = 'set_packing'
    point_packing = 'point_packing'
    vertex_cover = 'vertex_cover'


MINIMIZE = {
    ProblemKind.set_cover,
    ProblemKind.hitting_set,
    ProblemKind.generalized_cover,
    ProblemKind.dominating_set,
    ProblemKind.vertex_cover
}
CHOOSE_EDGES = {
    ProblemKind.set_cover,
    ProblemKind.dominating_set,
    ProblemKind.independent_set,
    ProblemKind.set_packing,
    ProblemKind.vertex_cover
}


class ProblemInstance(CrossfreeBaseModel):
    """A problem kind over a hypergraph, with capacities for capacitated packing."""

    kind: ProblemKind
    hg: Hypergraph
    capacities: Optional[Dict[str, PositiveInt]] = None
    delta: Optional[PositiveInt] = None

    @root_validator(skip_on_failure=True)
    def _capacities_match_kind(cls, values):
        kind, hg, capacities = values['kind'], values['hg'], values['capacities']
        if (capacities is not None) != (kind == ProblemKind.capacitated_packing):
            raise ValueError('capacities are given exactly for capacitated packing')
        if capacities is not None:
            unknown = set(capacities).difference(hg.edges)
            missing = set(hg.edges).difference(capacities)
            if unknown or missing:
                raise ValueError(f'capacities must name every hyperedge, unknown {sorted(unknown)}, '
                                 f'missing {sorted(missing)}')
            delta = values['delta']
            if delta is not None and any(cap > delta for cap in capacities.values()):
                raise ValueError(f'capacities exceed the declared bound {delta}')
        if kind == ProblemKind.generalized_cover and hg.mode not in (None, const.MODE_INTERSECTION):
            raise ValueError('generalized cover runs on an intersection hypergraph')
        return values

    @property
    def minimize(self) -> bool:
        """Whether smaller solutions are better."""
        return self.kind in MINIMIZE

    def universe(self) -> List[str]:
        """Items a solution is drawn from."""
        return sorted(self.hg.edges) if self.kind in CHOOSE_EDGES else sorted(self.hg.ground)

    def feasible(self, chosen: Iterable[str]) -> bool:
        """Feasibility predicate of the problem."""
        picked = frozenset(chosen)
        edges = self.hg.edge_sets()
        kind = self.kind
        if kind == ProblemKind.set_cover:
            covered = frozenset().union(*(edges[name] for name in picked)) if picked else frozenset()
            return covered >= frozenset(self.hg.ground)
        if kind in (ProblemKind.hitting_set, ProblemKind.generalized_cover):
            return all(members & picked for members in edges.values())
        if kind == ProblemKind.dominating_set:
            return all(name in picked or any(edges[name] & edges[other] for other in picked) for name in edges)
        if kind in (ProblemKind.independent_set, ProblemKind.set_packing):
            return all(not edges[a] & edges[b] for a, b in itertools.combinations(sorted(picked), 2))
        if kind == ProblemKind.vertex_cover:
            return all(
                a in picked or b in picked for a, b in itertools.combinations(sorted(edges), 2) if edges[a] & edges[b]
            )
        if kind == ProblemKind.point_packing:
            return all(len(members & picked) <= 1 for members in edges.values())
        return all(len(members & picked) <= self.capacities[name] for name, members in edges.items())


class SwapScan(CrossfreeBaseModel):
    """How many swaps of one shape were tried at termination."""

    removed: int
    added: int
    tried: int


class LocalOptimalityCertificate(CrossfreeBaseModel):
    """Exhaustive scan of the k-swap neighborhood of a solution."""

    k: int
    value: int
    scans: List[SwapScan] = []


class SolverResult(CrossfreeBaseModel):
    """Outcome of local search."""

    kind: ProblemKind
    solution: List[str]
    value: int
    iterations: int
    fixed: List[str] = []
    certificate: LocalOptimalityCertificate


class OptimumResult(CrossfreeBaseModel):
    """Exact optimum of a small instance."""

    value: int
    witness: List[str]


class ColoringResult(CrossfreeBaseModel):
    """Colors of the support vertices."""

    colors: Dict[str, int]
    count: int
    degeneracy: int
    heawood_bound: Optional[int] = None


Feasible = Callable[[FrozenSet[str]], bool]


def _shapes(k: int, minimize: bool) -> List[Tuple[int, int]]:
    """(removed, added) swap sizes, improving ones only."""
    if minimize:
        return [(out, add) for out in range(1, k + 1) for add in range(out)]
    return [(out, add) for add in range(1, k + 1) for out in range(add)]


def _first_improvement(
    current: FrozenSet[str], universe: List[str], feasible: Feasible, k: int, minimize: bool
) -> Tuple[Optional[FrozenSet[str]], List[SwapScan]]:
    """Scan swaps in lexicographic order and return the first improving neighbor, with the scan counts."""
    inside = sorted(current)
    outside = [x for x in universe if x not in current]
    scans = []
    for removed, added in _shapes(k, minimize):
        tried = 0
        for out in itertools.combinations(inside, removed):
            for extra in itertools.combinations(outside, added):
                tried += 1
                candidate = current.difference(out).union(extra)
                if feasible(candidate):
                    scans.append(SwapScan(removed=removed, added=added, tried=tried))
                    return candidate, scans
        scans.append(SwapScan(removed=removed, added=added, tried=tried))
    return None, scans


def check_local_optimality(instance: ProblemInstance, solution: Iterable[str], k: int) -> LocalOptimalityCertificate:
    """
    Scan the whole k-swap neighborhood of a solution.

    Raises:
        ContractViolation: the solution is infeasible or some swap improves it.
    """
    current = frozenset(solution)
    if not instance.feasible(current):
        raise ContractViolation(f'{instance.kind.value} solution is not feasible')
    better, scans = _first_improvement(current, instance.universe(), instance.feasible, k, instance.minimize)
    if better is not None:
        raise ContractViolation(f'{instance.kind.value} solution is not {k}-swap locally optimal', sorted(better))
    return LocalOptimalityCertificate(k=k, value=len(current), scans=scans)


def _residual(instance: ProblemInstance) -> Tuple[FrozenSet[str], List[str], Feasible]:
    """
    Fix elements no capacity can ever cut and return the residual search space.

    An element is fixed when every hyperedge containing it has capacity at least its size.
    """
    edges = instance.hg.edge_sets()
    caps = instance.capacities or {}
    fixed = frozenset(
        x for x in instance.hg.ground if all(caps[n] >= len(m) for n, m in edges.items() if x in m)
    )
    residual = {n: caps[n] - len(m & fixed) for n, m in edges.items()}

    def feasible(chosen: FrozenSet[str]) -> bool:
        return all(len(m & chosen) <= residual[n] for n, m in edges.items())

    return fixed, [x for x in instance.universe() if x not in fixed], feasible


def local_search(instance: ProblemInstance, config: Optional[LocalSearchConfig] = None) -> SolverResult:
    """
    Improve a feasible solution by k-swaps until none improves it.

    Minimization starts from the whole universe, maximization from a seeded greedy solution. The first improving swap
    in lexicographic order is taken. Vertex cover is solved as the complement of an independent set.

    Raises:
        InfeasibleInstanceError: a covering instance whose full universe is infeasible.
        StepBudgetExhausted: more improving moves than max_iterations.
    """
    config = config or LocalSearchConfig()
    if instance.kind == ProblemKind.vertex_cover:
        dual = instance.copy(update={'kind': ProblemKind.independent_set})
        independent = local_search(dual, config)
        cover = [name for name in instance.universe() if name not in independent.solution]
        certificate = check_local_optimality(instance, cover, config.k)
        return SolverResult(
            kind=instance.kind,
            solution=cover,
            value=len(cover),
            iterations=independent.iterations,
            certificate=certificate
        )

    fixed: FrozenSet[str] = frozenset()
    universe = instance.universe()
    feasible: Feasible = instance.feasible
    if instance.kind == ProblemKind.capacitated_packing:
        fixed, universe, feasible = _residual(instance)
        logger.debug(f'{len(fixed)} elements fixed before the search')

    if instance.minimize:
        current = frozenset(universe)
        if not feasible(current):
            raise InfeasibleInstanceError(f'{instance.kind.value} instance has no feasible solution')
    else:
        order = list(universe)
        random.Random(config.seed).shuffle(order)
        current = frozenset()
        for item in order:
            if feasible(current | {item}):
                current = current | {item}

    iterations = 0
    while True:
        better, _ = _first_improvement(current, universe, feasible, config.k, instance.minimize)
        if better is None:
            break
        iterations += 1
        if iterations > config.max_iterations:
            raise StepBudgetExhausted(f'Local search exceeded {config.max_iterations} improving moves')
        current = better
    solution = sorted(current | fixed)
    certificate = check_local_optimality(instance, solution, config.k)
    logger.debug(f'{instance.kind.value}: value {len(solution)} after {iterations} moves')
    return SolverResult(
        kind=instance.kind,
        solution=solution,
        value=len(solution),
        iterations=iterations,
        fixed=sorted(fixed),
        certificate=certificate
    )


def brute_force_optimum(instance: ProblemInstance, max_size: int = 14) -> OptimumResult:
    """
    Exact optimum by enumeration, smallest sets first for minimization and largest first otherwise.

    Raises:
        OracleSizeError: the universe exceeds max_size.
        InfeasibleInstanceError: nothing is feasible.
    """
    universe = instance.universe()
    if len(universe) > max_size:
        raise OracleSizeError(f'Universe of {len(universe)} exceeds the oracle limit of {max_size}')
    sizes = range(len(universe) + 1) if instance.minimize else range(len(universe), -1, -1)
    for size in sizes:
        for chosen in itertools.combinations(universe, size):
            if instance.feasible(chosen):
                return OptimumResult(value=size, witness=list(chosen))
    raise InfeasibleInstanceError(f'{instance.kind.value} instance has no feasible solution')


def heawood_bound(genus: int) -> int:
    """Chromatic bound of the orientable surface of a genus, 4 on the sphere."""
    return int((7 + math.sqrt(1 + 24 * genus)) // 2)


def support_coloring(support: EmbeddedGraph, hg: Hypergraph, genus: Optional[int] = None) -> ColoringResult:
    """
    Color the support greedily in smallest-last order so no hyperedge of two or more elements is monochromatic.

    Raises:
        ContractViolation: a hyperedge ends up monochromatic, which means the support was not valid.
    """
    graph = as_networkx(support).copy()
    graph.add_nodes_from(hg.ground)
    colors = nx.coloring.greedy_color(graph, strategy='smallest_last') if graph.number_of_nodes() else {}
    ok, failing = check_no_monochromatic(hg, colors)
    if not ok:
        raise ContractViolation(f'Hyperedge {failing} is monochromatic, the support does not support it')
    degeneracy = max(nx.core_number(graph).values(), default=0)
    count = len(set(colors.values()))
    if count > degeneracy + 1:
        raise ContractViolation(f'{count} colors exceed degeneracy {degeneracy} plus one')
    return ColoringResult(
        colors=colors,
        count=count,
        degeneracy=degeneracy,
        heawood_bound=heawood_bound(genus) if genus is not None else None
    )
