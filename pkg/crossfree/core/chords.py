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
"""Runs, abab patterns and non-crossing chord sets on a cycle."""

import itertools
import logging
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple, TypeVar

from pydantic import root_validator

from crossfree.core.base_model import CrossfreeBaseModel
from crossfree.core.err import ContractViolation

logger = logging.getLogger(__name__)

T = TypeVar('T')

LABEL_FIRST = 'a'
LABEL_SECOND = 'b'


class CycleSystem(CrossfreeBaseModel):
    """A cycle of distinct vertices and named vertex subsets of it."""

    cycle: List[str]
    families: Dict[str, List[str]] = {}

    @root_validator(skip_on_failure=True)
    def _families_on_cycle(cls, values):
        cycle = values['cycle']
        if len(set(cycle)) != len(cycle):
            raise ValueError('cycle vertices must be distinct')
        on_cycle = set(cycle)
        for name, members in values['families'].items():
            stray = set(members).difference(on_cycle)
            if stray:
                raise ValueError(f'family {name} has vertices {sorted(stray)} off the cycle')
        return values

    def family_sets(self) -> Dict[str, FrozenSet[str]]:
        """Families as frozen sets."""
        return {name: frozenset(members) for name, members in self.families.items()}


class Chord(CrossfreeBaseModel):
    """A chord and the family whose runs it joins."""

    ends: Tuple[str, str]
    member: str


class ChordSet(CrossfreeBaseModel):
    """Non-crossing chords of a cycle."""

    cycle: List[str]
    chords: List[Chord] = []

    def pairs(self) -> List[Tuple[str, str]]:
        """Chord endpoints in insertion order."""
        return [chord.ends for chord in self.chords]


def alternation_witness(items: Sequence[Tuple[T, str]]) -> Optional[List[T]]:
    """
    Look for an abab pattern in a cyclic sequence of two-valued labels.

    Args:
        items: (payload, label) pairs in cyclic order.

    Returns:
        Payloads of the first items of four consecutive label blocks, or None when there are fewer than four blocks.
    """
    n = len(items)
    start = next((i for i in range(n) if items[i][1] != items[i - 1][1]), None)
    if start is None:
        return None
    rotated = list(items[start:]) + list(items[:start])
    heads = [rotated[0][0]]
    for prev, cur in zip(rotated, rotated[1:]):
        if cur[1] != prev[1]:
            heads.append(cur[0])
            if len(heads) == 4:
                return heads
    return None


def runs(cycle: Sequence[str], family: FrozenSet[str]) -> List[List[str]]:
    """
    Maximal arcs of consecutive cycle vertices inside a family.

    Runs come in cycle order, the run holding position 0 first, with a run wrapping over the end merged.
    """
    n = len(cycle)
    inside = [x in family for x in cycle]
    if not any(inside):
        return []
    if all(inside):
        return [list(cycle)]
    found: List[Tuple[int, List[str]]] = []
    for start in range(n):
        if inside[start] and not inside[start - 1]:
            arc = []
            i = start
            while inside[i % n]:
                arc.append(cycle[i % n])
                i += 1
            found.append((start - n if i > n else start, arc))
    return [arc for _, arc in sorted(found, key=lambda item: item[0])]


def is_abab_free(cycle: Sequence[str], first: FrozenSet[str],
                 second: FrozenSet[str]) -> Tuple[bool, Optional[List[str]]]:
    """
    Check that two families do not interleave on a cycle.

    Vertices in both families or in neither are ignored.

    Returns:
        (True, None) or (False, four cycle vertices in abab order).
    """
    items = []
    for x in cycle:
        if x in first and x not in second:
            items.append((x, LABEL_FIRST))
        elif x in second and x not in first:
            items.append((x, LABEL_SECOND))
    witness = alternation_witness(items)
    return witness is None, witness


def blocks(cycle: Sequence[str], chord: Tuple[str, str], family: FrozenSet[str]) -> bool:
    """Check whether a chord separates the family while missing both of its ends."""
    x, y = chord
    if x in family or y in family:
        return False
    i, j = sorted((cycle.index(x), cycle.index(y)))
    inner = cycle[i + 1:j]
    outer = list(cycle[j + 1:]) + list(cycle[:i])
    return any(v in family for v in inner) and any(v in family for v in outer)


def chords_cross(cycle: Sequence[str], one: Tuple[str, str], other: Tuple[str, str]) -> bool:
    """Check whether two chords interleave strictly around the cycle."""
    position = {v: i for i, v in enumerate(cycle)}
    a, b = sorted((position[one[0]], position[one[1]]))
    c, d = sorted((position[other[0]], position[other[1]]))
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def cost(cycle: Sequence[str], families: Mapping[str, FrozenSet[str]]) -> int:
    """Total number of extra runs, zero exactly when every family is one arc."""
    return sum(max(0, len(runs(cycle, family)) - 1) for family in families.values())


def _distinct_families(cycle: Sequence[str], families: Mapping[str, FrozenSet[str]]) -> Dict[str, FrozenSet[str]]:
    on_cycle = frozenset(cycle)
    kept: Dict[str, FrozenSet[str]] = {}
    seen = set()
    for name in sorted(families):
        members = families[name] & on_cycle
        if members and members not in seen:
            seen.add(members)
            kept[name] = members
    return kept


def _require_abab_free(cycle: Sequence[str], families: Mapping[str, FrozenSet[str]]) -> None:
    for first, second in itertools.combinations(sorted(families), 2):
        free, witness = is_abab_free(cycle, families[first], families[second])
        if not free:
            raise ContractViolation(f'Families {first} and {second} interleave on the cycle', witness=witness)


def _nonblocking(cycle: Sequence[str], families: Mapping[str, FrozenSet[str]]) -> Optional[Chord]:
    disconnected = {name: fam for name, fam in families.items() if len(runs(cycle, fam)) > 1}
    if not disconnected:
        return None

    def is_minimal(name: str) -> bool:
        return not any(other < disconnected[name] for other in disconnected.values())

    order = sorted(disconnected, key=lambda name: (not is_minimal(name), len(disconnected[name]), name))
    for name in order:
        arcs = runs(cycle, disconnected[name])
        for left, right in itertools.combinations(arcs, 2):
            for x, y in itertools.product(left, right):
                if not any(blocks(cycle, (x, y), fam) for fam in families.values()):
                    return Chord(ends=(x, y), member=name)
    raise ContractViolation('Every chord between runs blocks some family')


def find_non_blocking_chord(system: CycleSystem) -> Optional[Chord]:
    """
    Find a chord joining two runs of a disconnected family that blocks no family.

    Minimal disconnected families are scanned first, then by size and name. Duplicate families are merged first.

    Returns:
        The chord, or None when every family is a single run.

    Raises:
        ContractViolation: two families interleave.
    """
    families = _distinct_families(system.cycle, system.family_sets())
    _require_abab_free(system.cycle, families)
    return _nonblocking(system.cycle, families)


def split_on_chord(cycle: Sequence[str], chord: Tuple[str, str]) -> Tuple[List[str], List[str]]:
    """The two cycles a chord cuts a cycle into, each keeping the chord ends."""
    i, j = sorted((cycle.index(chord[0]), cycle.index(chord[1])))
    return list(cycle[i:j + 1]), list(cycle[j:]) + list(cycle[:i + 1])


def chord_set(system: CycleSystem) -> ChordSet:
    """
    Add non-crossing chords until every family induces a connected subgraph of cycle plus chords.

    Each chord cuts the current cycle in two, and both halves are processed with the families restricted to them.
    The total cost of the two halves is strictly below the cost of the cycle they came from.

    Raises:
        ContractViolation: the families interleave, a split does not lower the cost, or the result breaks the
            non-crossing or size bounds.
    """
    families = _distinct_families(system.cycle, system.family_sets())
    _require_abab_free(system.cycle, families)
    found: List[Chord] = []
    pending = [list(system.cycle)]
    while pending:
        cycle = pending.pop()
        local = _distinct_families(cycle, families)
        chord = _nonblocking(cycle, local)
        if chord is None:
            continue
        logger.debug(f'Chord {chord.ends} joins runs of {chord.member}')
        found.append(chord)
        halves = split_on_chord(cycle, chord.ends)
        before = cost(cycle, local)
        after = sum(cost(half, _distinct_families(half, local)) for half in halves)
        if after >= before:
            raise ContractViolation(f'Chord {chord.ends} left the cost at {after}, not below {before}')
        pending.extend(halves)
    result = ChordSet(cycle=list(system.cycle), chords=found)
    n = len(system.cycle)
    if len(found) > max(0, n - 3):
        raise ContractViolation(f'{len(found)} chords exceed the bound for a {n}-cycle')
    for one, other in itertools.combinations(result.pairs(), 2):
        if chords_cross(system.cycle, one, other):
            raise ContractViolation(f'Chords {one} and {other} cross', witness=[*one, *other])
    return result
