"""Iteration-synchronous wavefront expansion over a grid.

The wave starts at the source with cost 0.  Iteration k costs every
still-unreached traversable cell that is an admissible 8-neighbor of a
cell costed k-1, so a cell's cost is the iteration at which the wave
first reached it.  First write wins: once costed, a cell is never
updated.  Obstacles the scan touches are costed INFINITY.  Cells costed
right beside an obstacle the scan touched in the same iteration are
recorded as "new sources": the points from which the wave spills around
the blockage.  Because all frontier cells expand simultaneously and
first write wins, new sources are pure trace metadata; they never change
the resulting costs.

The expansion stops once the destination is costed (when asked to) or
when an iteration costs no new cell, which on a destination-less or
blocked map means the source's whole connected component is costed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .costs import INFINITY, UNREACHED, CostField
from .grid import OFFSETS_CLOCKWISE, CellKind, Coord, CornerRule, GridMap, step_allowed


@dataclass(frozen=True)
class IterationRecord:
    """Cells first costed in one iteration, plus the new sources among them."""

    k: int
    costed: frozenset
    new_sources: frozenset


@dataclass(frozen=True)
class FloodTrace:
    """Per-iteration audit of an expansion, for rendering and testing.

    Iteration numbers run 1, 2, 3, ... with no gaps; the costed sets are
    pairwise disjoint and each iteration's new_sources is a subset of its
    costed set.
    """

    width: int
    height: int
    iterations: tuple[IterationRecord, ...]


@dataclass(frozen=True)
class FloodOutcome:
    field: CostField
    trace: FloodTrace
    reached_destination: bool
    iterations_run: int


def ring_cells(center: Coord, k: int, grid: GridMap) -> list[Coord]:
    """In-bounds cells of the square ring at Chebyshev radius k around center.

    Order: top row left to right, right column top to bottom, bottom row
    left to right, left column top to bottom.  k=0 yields just the
    center; an unclipped ring has 8k cells for k >= 1.
    """
    center = Coord(*center)
    if not grid.in_bounds(center):
        raise ValueError(f"{center} is outside the {grid.width}x{grid.height} grid")
    if k < 0:
        raise ValueError("ring radius must be non-negative")
    if k == 0:
        return [center]
    top, bottom = center.row - k, center.row + k
    left, right = center.col - k, center.col + k
    ring = [Coord(top, col) for col in range(left, right + 1)]
    ring += [Coord(row, right) for row in range(top + 1, bottom)]
    ring += [Coord(bottom, col) for col in range(left, right + 1)]
    ring += [Coord(row, left) for row in range(top + 1, bottom)]
    return [cell for cell in ring if grid.in_bounds(cell)]


_ORTHOGONAL = ((-1, 0), (0, 1), (1, 0), (0, -1))


def flood(
    grid: GridMap,
    rule: CornerRule = CornerRule.ALLOW,
    stop_at_destination: bool = True,
) -> FloodOutcome:
    """Expand the wave from the source and return field, trace, and stats.

    ``iterations_run`` counts expansion levels that costed at least one
    cell; the final scan that finds nothing new is not counted (it still
    marks the obstacles it touches).  An unreachable destination is not
    an error: the outcome simply has ``reached_destination=False``.
    """
    rule = CornerRule.coerce(rule)
    values: list = [UNREACHED] * (grid.width * grid.height)
    values[grid.index(grid.source)] = 0

    frontier: list[Coord] = [grid.source]
    records: list[IterationRecord] = []
    iterations_run = 0
    k = 0
    while frontier:
        k += 1
        costed: list[Coord] = []
        inspected: set[Coord] = set()
        for cell in frontier:
            for d_row, d_col in OFFSETS_CLOCKWISE:
                neighbor = Coord(cell.row + d_row, cell.col + d_col)
                if not grid.in_bounds(neighbor):
                    continue
                index = grid.index(neighbor)
                kind = grid.cells[index]
                if kind is CellKind.OBSTACLE:
                    inspected.add(neighbor)
                    if values[index] is UNREACHED:
                        values[index] = INFINITY
                    continue
                if not kind.traversable:
                    continue
                if values[index] is not UNREACHED:
                    continue
                if not step_allowed(grid, cell, d_row, d_col, rule):
                    continue
                values[index] = k
                costed.append(neighbor)
        if not costed:
            break
        iterations_run = k
        new_sources = frozenset(
            cell
            for cell in costed
            if any(
                Coord(cell.row + d_row, cell.col + d_col) in inspected
                for d_row, d_col in _ORTHOGONAL
            )
        )
        records.append(IterationRecord(k, frozenset(costed), new_sources))
        if (
            stop_at_destination
            and grid.destination is not None
            and values[grid.index(grid.destination)] == k
        ):
            break
        frontier = costed

    field = CostField(grid.width, grid.height, tuple(values))
    reached = grid.destination is not None and field.is_finite(grid.destination)
    trace = FloodTrace(grid.width, grid.height, tuple(records))
    return FloodOutcome(field, trace, reached, iterations_run)


def full_flood_component(grid: GridMap, rule: CornerRule = CornerRule.ALLOW) -> FloodOutcome:
    """Flood to exhaustion: costs exactly the source's connected component."""
    return flood(grid, rule, stop_at_destination=False)
