"""Reference searches: a BFS distance oracle, Dijkstra, and A*.

All three move on the same 8-connected unit-cost grid as the wavefront
(every step costs 1, diagonals included), so Dijkstra's distances equal
BFS levels equal wavefront iteration numbers.  The BFS oracle keeps its
adjacency logic inline on purpose: it cross-checks the wavefront without
sharing its traversal code.

A* is run with either heuristic the CLI exposes.  Chebyshev distance
never exceeds the true remaining cost on this grid, so A*-Chebyshev is
exact; Euclidean distance does exceed it whenever the remainder includes
diagonal steps (a diagonal advances sqrt(2) of straight-line distance
but costs 1), so A*-Euclidean can return a path longer than optimal.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .costs import INFINITY, UNREACHED, CostField
from .errors import NoPathError
from .grid import CellKind, Coord, CornerRule, GridMap, neighbors8
from .paths import Path


class Heuristic(str, Enum):
    """Distance estimate used by A* to order its queue."""

    CHEBYSHEV = "chebyshev"
    EUCLIDEAN = "euclidean"

    @classmethod
    def coerce(cls, value: "Heuristic | str") -> "Heuristic":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ValueError(
                f"unknown heuristic {value!r}; expected 'chebyshev' or 'euclidean'"
            ) from None

    def distance(self, a: Coord, b: Coord) -> float:
        d_row = a[0] - b[0]
        d_col = a[1] - b[1]
        if self is Heuristic.CHEBYSHEV:
            return max(abs(d_row), abs(d_col))
        return math.sqrt(d_row * d_row + d_col * d_col)


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one best-first search run.

    ``expansions`` counts queue pops that did real work (stale entries
    skipped by lazy deletion are not expansions); ``visited`` is every
    cell the search assigned a tentative distance.  ``path`` is None on
    an exhausted search, in which case the counters describe the full
    sweep of the source's component.
    """

    path: Path | None
    expansions: int
    visited: frozenset


#: Reading order, deliberately different from the wavefront's clockwise scan.
_ORACLE_OFFSETS = (
    (-1, -1), (-1, 0), (-1, 1),
    (0, -1), (0, 1),
    (1, -1), (1, 0), (1, 1),
)


def bfs8_distance_field(grid: GridMap, rule: CornerRule = CornerRule.ALLOW) -> CostField:
    """Distance field by plain FIFO breadth-first search, for cross-checking.

    Finite values are hop counts from the source over admissible
    8-neighbor steps; obstacles within one king-move of a reached cell
    are INFINITY; everything else is UNREACHED.
    """
    rule = CornerRule.coerce(rule)
    forbid = rule is CornerRule.FORBID
    values: list = [UNREACHED] * (grid.width * grid.height)
    values[grid.index(grid.source)] = 0
    queue = deque([grid.source])
    while queue:
        row, col = queue.popleft()
        here = values[row * grid.width + col]
        for d_row, d_col in _ORACLE_OFFSETS:
            to = Coord(row + d_row, col + d_col)
            if not grid.is_traversable(to):
                continue
            if values[grid.index(to)] is not UNREACHED:
                continue
            if forbid and d_row and d_col:
                flank_a = Coord(row + d_row, col)
                flank_b = Coord(row, col + d_col)
                if not grid.is_traversable(flank_a) and not grid.is_traversable(flank_b):
                    # Blocked flanks may also be out of bounds; either way
                    # the diagonal cannot squeeze through.
                    continue
            values[grid.index(to)] = here + 1
            queue.append(to)

    # Obstacles adjacent (any of the 8 directions, corner rule irrelevant)
    # to a reached cell are the ones an exhaustive expansion would inspect.
    for i, value in enumerate(values):
        if not isinstance(value, int):
            continue
        row, col = i // grid.width, i % grid.width
        for d_row, d_col in _ORACLE_OFFSETS:
            to = Coord(row + d_row, col + d_col)
            if grid.in_bounds(to) and grid.kind(to) is CellKind.OBSTACLE:
                values[grid.index(to)] = INFINITY
    return CostField(grid.width, grid.height, tuple(values))


def _reconstruct(parent: dict, destination: Coord) -> Path:
    cells = [destination]
    while cells[-1] in parent:
        cells.append(parent[cells[-1]])
    cells.reverse()
    return Path(tuple(cells))


def _need_destination(grid: GridMap) -> Coord:
    if grid.destination is None:
        raise ValueError("map has no destination to search for")
    return grid.destination


def dijkstra(grid: GridMap, rule: CornerRule = CornerRule.ALLOW) -> SearchResult:
    """Uniform-cost search; expansions count settled cells.

    Ties in the queue break on (row, col) so runs are deterministic.
    Raises NoPathError (carrying the exhausted-run SearchResult) when the
    destination is unreachable, ValueError when the map has none.
    """
    destination = _need_destination(grid)
    rule = CornerRule.coerce(rule)
    best = {grid.source: 0}
    parent: dict = {}
    settled = set()
    expansions = 0
    heap = [(0, grid.source.row, grid.source.col)]
    while heap:
        dist, row, col = heapq.heappop(heap)
        at = Coord(row, col)
        if at in settled:
            continue
        settled.add(at)
        expansions += 1
        if at == destination:
            return SearchResult(_reconstruct(parent, at), expansions, frozenset(best))
        for to in neighbors8(grid, at, rule):
            candidate = dist + 1
            if candidate < best.get(to, math.inf):
                best[to] = candidate
                parent[to] = at
                heapq.heappush(heap, (candidate, to.row, to.col))
    raise NoPathError(
        f"no route from {grid.source} to {destination}",
        result=SearchResult(None, expansions, frozenset(best)),
    )


def astar(
    grid: GridMap,
    rule: CornerRule = CornerRule.ALLOW,
    heuristic: "Heuristic | str" = Heuristic.CHEBYSHEV,
) -> SearchResult:
    """Best-first search ordered by g + h; expansions count useful pops.

    Queue ties break on higher g first, then (row, col).  Cells are
    re-queued whenever a strictly better g appears (no closed set), so
    the Chebyshev variant is exact even though entries can go stale;
    stale pops are skipped without counting as expansions.
    """
    destination = _need_destination(grid)
    rule = CornerRule.coerce(rule)
    h = Heuristic.coerce(heuristic)
    best = {grid.source: 0}
    parent: dict = {}
    expansions = 0
    start_f = h.distance(grid.source, destination)
    heap = [(start_f, 0, grid.source.row, grid.source.col)]
    while heap:
        f, neg_g, row, col = heapq.heappop(heap)
        at = Coord(row, col)
        g = -neg_g
        if g != best[at]:
            continue  # stale entry superseded by a better route
        expansions += 1
        if at == destination:
            return SearchResult(_reconstruct(parent, at), expansions, frozenset(best))
        for to in neighbors8(grid, at, rule):
            candidate = g + 1
            if candidate < best.get(to, math.inf):
                best[to] = candidate
                parent[to] = at
                heapq.heappush(
                    heap, (candidate + h.distance(to, destination), -candidate, to.row, to.col)
                )
    raise NoPathError(
        f"no route from {grid.source} to {destination}",
        result=SearchResult(None, expansions, frozenset(best)),
    )
