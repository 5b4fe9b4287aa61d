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
Graph systems from cell regions on grid and torus-grid hosts.

Cell (r, c) is host vertex rRcC. Every vertex lists its neighbors as up, right, down, left, which embeds the plane
grid with genus 0 and the torus grid with genus 1.
"""

import itertools
import logging
import random
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from pydantic import PositiveInt, root_validator

from crossfree.core import const
from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.embedding import EmbeddedGraph, genus
from crossfree.core.err import CrossfreeValidationError
from crossfree.core.graph_system import Color, CrossingWitness, GraphSystem, PiercingWitness, is_cross_free
from crossfree.core.graph_system import is_non_piercing

logger = logging.getLogger(__name__)

Cell = Tuple[int, int]

# up, right, down, left
_STEPS = [(-1, 0), (0, 1), (1, 0), (0, -1)]
_ATTEMPTS = 200


class Topology(str, Enum):
    """Grid surface."""

    plane = 'plane'
    torus = 'torus'


class GridSpec(CrossfreeBaseModel):
    """Grid dimensions and surface."""

    rows: PositiveInt
    cols: PositiveInt
    topology: Topology = Topology.plane

    @root_validator(skip_on_failure=True)
    def _torus_is_simple(cls, values):
        if values['topology'] == Topology.torus and (values['rows'] < 3 or values['cols'] < 3):
            raise ValueError('a torus grid needs at least 3 rows and 3 columns')
        return values

    def cells(self) -> List[Cell]:
        """All cells in row-major order."""
        return [(r, c) for r in range(self.rows) for c in range(self.cols)]

    def contains(self, cell: Cell) -> bool:
        """Check whether a cell lies on the grid."""
        return 0 <= cell[0] < self.rows and 0 <= cell[1] < self.cols

    def neighbors(self, cell: Cell) -> List[Cell]:
        """Adjacent cells in up, right, down, left order."""
        found = []
        for dr, dc in _STEPS:
            r, c = cell[0] + dr, cell[1] + dc
            if self.topology == Topology.torus:
                found.append((r % self.rows, c % self.cols))
            elif self.contains((r, c)):
                found.append((r, c))
        return found


class Region(CrossfreeBaseModel):
    """A named set of grid cells."""

    name: str
    cells: List[Cell]


class RegionLayout(CrossfreeBaseModel):
    """A grid with H regions, optional K regions and optional red cells."""

    grid: GridSpec
    H: List[Region] = []
    K: Optional[List[Region]] = None
    red: Optional[List[Cell]] = None


class SystemVerdict(CrossfreeBaseModel):
    """Structural verdicts on a built system."""

    cross_free: bool
    non_piercing: bool
    genus: int
    crossing: Optional[CrossingWitness] = None
    piercing: Optional[PiercingWitness] = None


def cell_id(cell: Cell) -> str:
    """Host vertex id of a cell."""
    return f'r{cell[0]}c{cell[1]}'


def grid_graph(grid: GridSpec) -> EmbeddedGraph:
    """The grid host with the up, right, down, left rotation."""
    return EmbeddedGraph.from_rotation(
        {cell_id(cell): [cell_id(n) for n in grid.neighbors(cell)] for cell in grid.cells()}
    )


def _region_ids(grid: GridSpec, region: Region) -> FrozenSet[str]:
    if not region.cells:
        raise CrossfreeValidationError(f'Region {region.name} has no cells')
    outside = [cell for cell in region.cells if not grid.contains(cell)]
    if outside:
        raise CrossfreeValidationError(f'Region {region.name} has cells {outside} outside the grid')
    return frozenset(cell_id(cell) for cell in region.cells)


def _family(grid: GridSpec, host: EmbeddedGraph, regions: Iterable[Region]) -> Dict[str, FrozenSet[str]]:
    family: Dict[str, FrozenSet[str]] = {}
    for region in regions:
        if region.name in family:
            raise CrossfreeValidationError(f'Region name {region.name} is used twice')
        ids = _region_ids(grid, region)
        if not host.is_connected(ids):
            raise CrossfreeValidationError(f'Region {region.name} is not connected on the grid')
        family[region.name] = ids
    return family


def build_system(grid: GridSpec,
                 H: Sequence[Region],
                 K: Optional[Sequence[Region]] = None,
                 red: Optional[Iterable[Cell]] = None) -> Tuple[GraphSystem, SystemVerdict]:
    """
    Turn regions into a graph system on the grid host and report its structure.

    Cross-freeness is not assumed. The verdict reports it, with H and K checked separately.

    Args:
        grid: the grid.
        H: regions of the first family.
        K: optional regions of the second family.
        red: when given, these cells are colored red and every other cell blue.

    Raises:
        CrossfreeValidationError: a region is empty, leaves the grid or is disconnected.
    """
    host = grid_graph(grid)
    family_h = _family(grid, host, H)
    family_k = _family(grid, host, K) if K is not None else None
    coloring = None
    if red is not None:
        red = list(red)
        outside = [cell for cell in red if not grid.contains(cell)]
        if outside:
            raise CrossfreeValidationError(f'Red cells {outside} are outside the grid')
        reds = {cell_id(cell) for cell in red}
        coloring = {v: (Color.red if v in reds else Color.blue) for v in host.vertices}
    system = GraphSystem(host, family_h, family_k, coloring)
    free, crossing = is_cross_free(system)
    non_piercing, piercing = is_non_piercing(system)
    verdict = SystemVerdict(
        cross_free=free, non_piercing=non_piercing, genus=genus(host), crossing=crossing, piercing=piercing
    )
    logger.debug(f'Built {system} on a {grid.rows}x{grid.cols} {grid.topology.value} grid')
    return system, verdict


def build_layout(layout: RegionLayout) -> Tuple[GraphSystem, SystemVerdict]:
    """Build the system a layout describes."""
    return build_system(layout.grid, layout.H, layout.K, layout.red)


def rectangle(name: str, top: int, left: int, height: int, width: int) -> Region:
    """Axis-aligned block of cells."""
    return Region(name=name, cells=[(r, c) for r in range(top, top + height) for c in range(left, left + width)])


def torus_row(name: str, row: int, grid: GridSpec) -> Region:
    """A whole grid row, a cycle on the torus."""
    return Region(name=name, cells=[(row, c) for c in range(grid.cols)])


def torus_column(name: str, col: int, grid: GridSpec) -> Region:
    """A whole grid column, a cycle on the torus."""
    return Region(name=name, cells=[(r, col) for r in range(grid.rows)])


def torus_cycles_layout(size: int = 3) -> RegionLayout:
    """Every row cycle and column cycle of a square torus grid as H."""
    grid = GridSpec(rows=size, cols=size, topology=Topology.torus)
    rows = [torus_row(f'row{r}', r, grid) for r in range(size)]
    cols = [torus_column(f'col{c}', c, grid) for c in range(size)]
    return RegionLayout(grid=grid, H=rows + cols)


def _pierces(host: EmbeddedGraph, one: FrozenSet[Cell], other: FrozenSet[Cell]) -> bool:
    return not all(host.is_connected({cell_id(cell) for cell in rest}) for rest in (one - other, other - one))


def _random_rectangle(grid: GridSpec, rng: random.Random) -> FrozenSet[Cell]:
    top, bottom = sorted(rng.randrange(grid.rows) for _ in range(2))
    left, right = sorted(rng.randrange(grid.cols) for _ in range(2))
    return frozenset(itertools.product(range(top, bottom + 1), range(left, right + 1)))


def _rectangles(grid: GridSpec, count: int, prefix: str, rng: random.Random) -> List[Region]:
    host = grid_graph(grid)
    chosen: List[FrozenSet[Cell]] = []
    for _ in range(count):
        for _ in range(_ATTEMPTS):
            candidate = _random_rectangle(grid, rng)
            if not any(_pierces(host, candidate, other) for other in chosen):
                break
        else:
            candidate = chosen[0]
            logger.debug('No non-piercing rectangle found, repeating the first one')
        chosen.append(candidate)
    return [Region(name=f'{prefix}{i}', cells=sorted(cells)) for i, cells in enumerate(chosen)]


def _red_cells(grid: GridSpec, red_fraction: float, rng: random.Random) -> Optional[List[Cell]]:
    if red_fraction <= 0:
        return None
    return [cell for cell in grid.cells() if rng.random() < red_fraction]


def random_rectangle_layout(grid: GridSpec,
                            count: int,
                            seed: int,
                            k_count: int = 0,
                            red_fraction: float = 0.0) -> RegionLayout:
    """
    Seeded layout of pairwise non-piercing axis-aligned rectangles on a plane grid.

    Args:
        grid: a plane grid.
        count: number of H rectangles.
        seed: seed of every random choice.
        k_count: number of K rectangles, K is omitted when zero.
        red_fraction: chance of a cell being red, no coloring when zero.

    Raises:
        CrossfreeValidationError: the grid is a torus.
    """
    if grid.topology != Topology.plane:
        raise CrossfreeValidationError('Random rectangles are generated on plane grids only')
    rng = random.Random(seed)
    family_h = _rectangles(grid, count, 'H', rng)
    family_k = _rectangles(grid, k_count, 'K', rng) if k_count else None
    return RegionLayout(grid=grid, H=family_h, K=family_k, red=_red_cells(grid, red_fraction, rng))


def random_rectangle_system(grid: GridSpec,
                            count: int,
                            seed: int,
                            k_count: int = 0,
                            red_fraction: float = 0.0) -> GraphSystem:
    """Seeded system of pairwise non-piercing rectangles, see random_rectangle_layout."""
    system, _ = build_layout(random_rectangle_layout(grid, count, seed, k_count, red_fraction))
    return system


def _random_blob(grid: GridSpec, size: int, rng: random.Random) -> FrozenSet[Cell]:
    cells = {rng.choice(grid.cells())}
    while len(cells) < size:
        frontier = sorted({n for cell in cells for n in grid.neighbors(cell)} - cells)
        if not frontier:
            break
        cells.add(rng.choice(frontier))
    return frozenset(cells)


def _blobs(grid: GridSpec, count: int, prefix: str, max_size: int, rng: random.Random) -> List[Region]:
    return [
        Region(name=f'{prefix}{i}', cells=sorted(_random_blob(grid, rng.randint(1, max_size), rng)))
        for i in range(count)
    ]


def random_region_layout(grid: GridSpec,
                         count: int,
                         seed: int,
                         max_size: int = 6,
                         red_fraction: float = 0.0,
                         k_count: int = 0) -> RegionLayout:
    """
    Seeded layout of connected cell blobs of 1 to max_size cells, with no guarantee on how they overlap.

    K blobs are drawn after H and the red cells.
    """
    rng = random.Random(seed)
    family_h = _blobs(grid, count, 'H', max_size, rng)
    red = _red_cells(grid, red_fraction, rng)
    family_k = _blobs(grid, k_count, 'K', max_size, rng) if k_count else None
    return RegionLayout(grid=grid, H=family_h, K=family_k, red=red)


def random_region_system(grid: GridSpec,
                         count: int,
                         seed: int,
                         max_size: int = 6,
                         red_fraction: float = 0.0,
                         k_count: int = 0) -> Tuple[GraphSystem, SystemVerdict]:
    """Seeded system of connected blobs together with its verdict."""
    return build_layout(random_region_layout(grid, count, seed, max_size, red_fraction, k_count))


def is_weakly_non_piercing(system: GraphSystem,
                           which: str = const.FAMILY_H) -> Tuple[bool, Optional[PiercingWitness]]:
    """Check that for every pair of members at least one of the two differences is connected or empty."""
    family = system.family(which)
    for first, second in itertools.combinations(sorted(family), 2):
        one = system.host.components(family[first] - family[second])
        other = system.host.components(family[second] - family[first])
        if len(one) > 1 and len(other) > 1:
            return False, PiercingWitness(members=(first, second), components=one)
    return True, None
