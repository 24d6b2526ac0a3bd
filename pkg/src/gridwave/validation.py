"""Input validation helpers shared by the solver classes and the CLI."""

from __future__ import annotations

from collections.abc import Iterable

from .errors import NotFittedError
from .grid import Coord, GridMap, parse_map


def as_grid_map(value) -> GridMap:
    """Coerce solver input to a GridMap.

    Accepts a GridMap (returned as-is), map text as a single string, or
    an iterable of row strings.  Anything else raises TypeError.
    """
    if isinstance(value, GridMap):
        return value
    if isinstance(value, str):
        return parse_map(value if value.endswith("\n") else value + "\n")
    if isinstance(value, Iterable):
        rows = list(value)
        if not all(isinstance(row, str) for row in rows):
            raise TypeError("map rows must all be strings")
        return parse_map("\n".join(rows) + "\n")
    raise TypeError(
        f"cannot interpret {type(value).__name__!r} as a map; "
        "pass a GridMap, map text, or an iterable of row strings"
    )


def check_is_fitted(solver, attributes: "Iterable[str] | None" = None) -> None:
    """Raise NotFittedError unless ``solver`` carries its fitted state.

    Without ``attributes`` any instance attribute ending in an underscore
    (and not starting with one) counts as evidence of a completed fit,
    mirroring the scikit-learn convention.
    """
    if attributes is not None:
        missing = [name for name in attributes if not hasattr(solver, name)]
        fitted = not missing
    else:
        fitted = any(
            name.endswith("_") and not name.startswith("_") for name in vars(solver)
        )
    if not fitted:
        raise NotFittedError(
            f"This {type(solver).__name__} instance is not fitted yet. "
            "Call 'fit' with an appropriate map before using this method."
        )


def ensure_destination(grid: GridMap) -> Coord:
    """Return the grid's destination or raise ValueError when absent."""
    if grid.destination is None:
        raise ValueError("this operation needs a map with a destination cell")
    return grid.destination
