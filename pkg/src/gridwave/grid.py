"""Grid model: coordinates, cell kinds, adjacency, and the ASCII map format.

Map files are UTF-8 text, one row per line, top row first:

    ``#``  boundary wall          ``@``  obstacle
    ``.``  passable cell          ``S``  source (exactly one)
    ``D``  destination (at most one)

Maps do not need a closed ``#`` border; anything outside the grid behaves
like boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

from .errors import (
    MapFormatError,
    MultipleDestinationsError,
    MultipleSourcesError,
    NoSourceError,
    RaggedRowsError,
    UnknownSymbolError,
)


class Coord(NamedTuple):
    """Zero-based (row, col) grid position."""

    row: int
    col: int


class CellKind(Enum):
    """What occupies a cell; the enum value is the map symbol."""

    BOUNDARY = "#"
    OBSTACLE = "@"
    PASSABLE = "."
    SOURCE = "S"
    DESTINATION = "D"

    @property
    def symbol(self) -> str:
        return self.value

    @property
    def traversable(self) -> bool:
        """Source and destination count as passable for movement."""
        return self in (CellKind.PASSABLE, CellKind.SOURCE, CellKind.DESTINATION)


_KIND_BY_SYMBOL = {kind.value: kind for kind in CellKind}


class CornerRule(str, Enum):
    """Whether a diagonal step may squeeze between two blocked orthogonals.

    ALLOW permits every diagonal into a traversable cell.  FORBID drops a
    diagonal neighbor when *both* cells flanking the step (the two
    orthogonal cells the move slides between) are obstacles or boundary.
    """

    ALLOW = "allow"
    FORBID = "forbid"

    @classmethod
    def coerce(cls, value: "CornerRule | str") -> "CornerRule":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise ValueError(
                f"unknown corner rule {value!r}; expected 'allow' or 'forbid'"
            ) from None


#: The eight neighbor offsets in canonical clockwise-from-up order.
OFFSETS_CLOCKWISE: tuple[tuple[int, int], ...] = (
    (-1, 0),   # up
    (-1, 1),   # up-right
    (0, 1),    # right
    (1, 1),    # down-right
    (1, 0),    # down
    (1, -1),   # down-left
    (0, -1),   # left
    (-1, -1),  # up-left
)


@dataclass(frozen=True)
class GridMap:
    """Immutable rectangular grid with one source and an optional destination.

    ``cells`` is row-major; invariants (cell count, exactly one source cell,
    at most one destination, coordinate agreement) are checked on
    construction.
    """

    width: int
    height: int
    cells: tuple[CellKind, ...]
    source: Coord
    destination: Coord | None = None

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("grid dimensions must be positive")
        if len(self.cells) != self.width * self.height:
            raise ValueError(
                f"cell count {len(self.cells)} does not match "
                f"{self.width}x{self.height}"
            )
        sources = [i for i, k in enumerate(self.cells) if k is CellKind.SOURCE]
        destinations = [i for i, k in enumerate(self.cells) if k is CellKind.DESTINATION]
        if len(sources) != 1:
            raise ValueError(f"expected exactly one source cell, found {len(sources)}")
        if len(destinations) > 1:
            raise ValueError(f"expected at most one destination cell, found {len(destinations)}")
        if self.index(self.source) != sources[0]:
            raise ValueError(f"source coordinate {self.source} does not point at the S cell")
        if destinations:
            if self.destination is None or self.index(self.destination) != destinations[0]:
                raise ValueError("destination coordinate does not point at the D cell")
        elif self.destination is not None:
            raise ValueError("destination coordinate given but no D cell present")

    def index(self, at: Coord) -> int:
        return at[0] * self.width + at[1]

    def in_bounds(self, at: Coord) -> bool:
        return 0 <= at[0] < self.height and 0 <= at[1] < self.width

    def kind(self, at: Coord) -> CellKind:
        if not self.in_bounds(at):
            raise IndexError(f"{at} is outside the {self.width}x{self.height} grid")
        return self.cells[self.index(at)]

    def is_traversable(self, at: Coord) -> bool:
        """True for an in-bounds passable, source, or destination cell."""
        return self.in_bounds(at) and self.cells[self.index(at)].traversable

    def coords(self) -> Iterator[Coord]:
        for row in range(self.height):
            for col in range(self.width):
                yield Coord(row, col)

    def traversable_cells(self) -> Iterator[Coord]:
        for at in self.coords():
            if self.cells[self.index(at)].traversable:
                yield at

    def count(self, kind: CellKind) -> int:
        return sum(1 for k in self.cells if k is kind)

    def traversable_count(self) -> int:
        return sum(1 for k in self.cells if k.traversable)


def parse_map(text: str) -> GridMap:
    """Parse ASCII map text into a GridMap.

    One trailing newline is tolerated; line order is row order.  Raises
    RaggedRowsError, UnknownSymbolError (with the offending row/col),
    NoSourceError, MultipleSourcesError, or MultipleDestinationsError.
    """
    if not text:
        raise MapFormatError("map text is empty")
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    lines = [line[:-1] if line.endswith("\r") else line for line in lines]
    if not lines or lines[0] == "":
        raise MapFormatError("map text has no rows")

    width = len(lines[0])
    height = len(lines)
    cells: list[CellKind] = []
    source: Coord | None = None
    destination: Coord | None = None
    for row, line in enumerate(lines):
        if len(line) != width:
            raise RaggedRowsError(
                f"row {row} has length {len(line)}, expected {width}", row=row
            )
        for col, char in enumerate(line):
            kind = _KIND_BY_SYMBOL.get(char)
            if kind is None:
                raise UnknownSymbolError(
                    f"unknown symbol {char!r} at row {row}, col {col}", row=row, col=col
                )
            if kind is CellKind.SOURCE:
                if source is not None:
                    raise MultipleSourcesError(
                        f"second source at row {row}, col {col}", row=row, col=col
                    )
                source = Coord(row, col)
            elif kind is CellKind.DESTINATION:
                if destination is not None:
                    raise MultipleDestinationsError(
                        f"second destination at row {row}, col {col}", row=row, col=col
                    )
                destination = Coord(row, col)
            cells.append(kind)
    if source is None:
        raise NoSourceError("map has no source cell")
    return GridMap(width, height, tuple(cells), source, destination)


def render_map(grid: GridMap) -> str:
    """Inverse of parse_map: canonical text with one trailing newline."""
    rows = []
    for row in range(grid.height):
        start = row * grid.width
        rows.append("".join(k.symbol for k in grid.cells[start : start + grid.width]))
    return "\n".join(rows) + "\n"


def _is_blocking(grid: GridMap, at: Coord) -> bool:
    """Out-of-bounds, boundary, and obstacle cells block corner cutting."""
    if not grid.in_bounds(at):
        return True
    return grid.cells[grid.index(at)] in (CellKind.BOUNDARY, CellKind.OBSTACLE)


def step_allowed(grid: GridMap, at: Coord, d_row: int, d_col: int, rule: CornerRule) -> bool:
    """Whether the unit step from ``at`` in direction (d_row, d_col) is admissible.

    The target must be an in-bounds traversable cell; under
    CornerRule.FORBID a diagonal is additionally rejected when both
    flanking orthogonal cells are blocking.
    """
    to = Coord(at[0] + d_row, at[1] + d_col)
    if not grid.is_traversable(to):
        return False
    if d_row and d_col and rule is CornerRule.FORBID:
        if _is_blocking(grid, Coord(at[0] + d_row, at[1])) and _is_blocking(
            grid, Coord(at[0], at[1] + d_col)
        ):
            return False
    return True


def neighbors8(grid: GridMap, at: Coord, rule: CornerRule = CornerRule.ALLOW) -> list[Coord]:
    """Admissible traversable neighbors of ``at`` in clockwise-from-up order.

    Never returns boundary or obstacle cells, never leaves the grid, and
    under ALLOW is symmetric: b in neighbors8(a) iff a in neighbors8(b).
    """
    at = Coord(*at)
    if not grid.in_bounds(at):
        raise ValueError(f"{at} is outside the {grid.width}x{grid.height} grid")
    rule = CornerRule.coerce(rule)
    return [
        Coord(at.row + d_row, at.col + d_col)
        for d_row, d_col in OFFSETS_CLOCKWISE
        if step_allowed(grid, at, d_row, d_col, rule)
    ]
