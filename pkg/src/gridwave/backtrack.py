"""Reverse traversal: recover shortest paths by descending the cost field.

Over an exact distance field every shortest path steps from a cell of
cost k to a neighbor of cost k-1, so descending from the destination
needs no visited set and terminates in exactly cost(destination) steps.
Ties (several k-1 neighbors) branch into separate paths.
"""

from __future__ import annotations

from typing import Iterator

from .costs import CostField
from .errors import MissingCostError, NoPathError
from .grid import Coord, CornerRule, GridMap, neighbors8
from .paths import Path, PathSet

MODES = ("first", "all")


def descend_candidates(
    field: CostField,
    grid: GridMap,
    at: Coord,
    rule: CornerRule = CornerRule.ALLOW,
) -> list[Coord]:
    """Admissible neighbors of ``at`` one cost level down, clockwise from up.

    Raises MissingCostError when ``at`` has no finite cost, which means
    the field was not flooded for this map (or not at all).
    """
    _check_field(field, grid)
    at = Coord(*at)
    cost = field.at(at)
    if not isinstance(cost, int):
        raise MissingCostError(f"cell {at} has cost {cost!r}, expected a finite value")
    if cost == 0:
        return []
    wanted = cost - 1
    return [nb for nb in neighbors8(grid, at, rule) if field.at(nb) == wanted]


def backtrack(
    field: CostField,
    grid: GridMap,
    rule: CornerRule = CornerRule.ALLOW,
    mode: str = "first",
    max_paths: int = 64,
) -> PathSet:
    """Recover shortest path(s) from the grid's destination to its source.

    mode="first" follows the first candidate at every step and returns a
    single path; mode="all" enumerates every distinct descent depth-first
    in canonical neighbor order, up to ``max_paths`` (the result is marked
    truncated when more remain).  Every returned path runs source to
    destination with costs ascending 0, 1, 2, ... exactly.

    Raises NoPathError when the destination was never reached, and
    ValueError when the map has no destination at all.
    """
    if grid.destination is None:
        raise ValueError("map has no destination to backtrack from")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if max_paths < 1:
        raise ValueError("max_paths must be at least 1")
    _check_field(field, grid)
    rule = CornerRule.coerce(rule)

    destination = grid.destination
    cost = field.at(destination)
    if not isinstance(cost, int):
        raise NoPathError(f"destination {destination} was never reached")

    if mode == "first":
        return PathSet((_first_descent(field, grid, destination, rule),), truncated=False)

    paths = []
    truncated = False
    for descent in _all_descents(field, grid, destination, rule):
        if len(paths) == max_paths:
            truncated = True
            break
        paths.append(descent)
    return PathSet(tuple(paths), truncated)


def _check_field(field: CostField, grid: GridMap) -> None:
    if not field.matches(grid):
        raise MissingCostError(
            f"cost field is {field.width}x{field.height} "
            f"but the map is {grid.width}x{grid.height}"
        )


def _step_down(field: CostField, grid: GridMap, at: Coord, rule: CornerRule) -> list[Coord]:
    candidates = descend_candidates(field, grid, at, rule)
    if not candidates:
        raise MissingCostError(
            f"no descent candidate below {at}; the field does not match the map"
        )
    return candidates


def _first_descent(field: CostField, grid: GridMap, destination: Coord, rule: CornerRule) -> Path:
    reversed_cells = [destination]
    at = destination
    while field.at(at) != 0:
        at = _step_down(field, grid, at, rule)[0]
        reversed_cells.append(at)
    return Path(tuple(reversed(reversed_cells)))


def _all_descents(
    field: CostField, grid: GridMap, destination: Coord, rule: CornerRule
) -> Iterator[Path]:
    """Depth-first enumeration; yields paths in canonical candidate order."""
    stack = [destination]

    def walk() -> Iterator[Path]:
        at = stack[-1]
        if field.at(at) == 0:
            yield Path(tuple(reversed(stack)))
            return
        for candidate in _step_down(field, grid, at, rule):
            stack.append(candidate)
            yield from walk()
            stack.pop()

    return walk()
