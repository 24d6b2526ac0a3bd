"""Path value types shared by the wavefront backtracker and the searches."""

from __future__ import annotations

from dataclasses import dataclass, field

from .grid import Coord


@dataclass(frozen=True)
class Path:
    """A source-to-destination sequence of 8-adjacent coordinates."""

    cells: tuple[Coord, ...]

    def __post_init__(self):
        if not self.cells:
            raise ValueError("a path needs at least one cell")

    @property
    def length(self) -> int:
        """Number of steps, one less than the number of cells."""
        return len(self.cells) - 1

    @property
    def source(self) -> Coord:
        return self.cells[0]

    @property
    def destination(self) -> Coord:
        return self.cells[-1]


@dataclass(frozen=True)
class PathSet:
    """Paths found for one solve; ``truncated`` means the cap was hit."""

    paths: tuple[Path, ...] = field(default_factory=tuple)
    truncated: bool = False

    @property
    def count(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __len__(self):
        return len(self.paths)

    def __getitem__(self, i):
        return self.paths[i]
