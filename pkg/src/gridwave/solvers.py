"""Solver classes wrapping the algorithms in a fit/transform/predict API.

The classes follow the scikit-learn estimator conventions -- constructor
parameters stored verbatim, ``get_params``/``set_params``, fitted state
in trailing-underscore attributes, NotFittedError before fit -- without
depending on scikit-learn itself.  ``WavefrontSolver.fit`` computes the
distance field for a map (no destination required), ``transform``
returns that field, and ``predict`` recovers the shortest path(s).  The
two search solvers share the surface so the benchmark can drive every
algorithm the same way.
"""

from __future__ import annotations

import inspect

from .backtrack import backtrack
from .baselines import Heuristic, SearchResult, astar, dijkstra
from .costs import CostField
from .errors import NoPathError
from .grid import CornerRule, GridMap
from .paths import PathSet
from .validation import as_grid_map, check_is_fitted
from .wavefront import flood


class BaseSolver:
    """Parameter-handling shared by every solver class."""

    @classmethod
    def _param_names(cls) -> list[str]:
        signature = inspect.signature(cls.__init__)
        return sorted(
            p.name
            for p in signature.parameters.values()
            if p.name != "self" and p.kind not in (p.VAR_POSITIONAL, p.VAR_KEYWORD)
        )

    def get_params(self, deep: bool = True) -> dict:
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params) -> "BaseSolver":
        valid = self._param_names()
        for key, value in params.items():
            if key not in valid:
                raise ValueError(
                    f"invalid parameter {key!r} for {type(self).__name__}; "
                    f"valid parameters are {valid}"
                )
            setattr(self, key, value)
        return self

    def __repr__(self) -> str:
        rendered = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({rendered})"

    def _coerced(self, X) -> GridMap:
        grid = as_grid_map(X)
        # Parameters are stored verbatim at construction (so cloning and
        # grid searches see exactly what was passed); coercion happens here.
        self._rule = CornerRule.coerce(self.corner_rule)
        return grid

    def _fitted_grid(self, X) -> GridMap:
        check_is_fitted(self, ["grid_"])
        if X is None:
            return self.grid_
        grid = as_grid_map(X)
        if grid != self.grid_:
            raise ValueError(
                "this solver was fitted on a different map; call fit on this one first"
            )
        return grid


class WavefrontSolver(BaseSolver):
    """Two-stage shortest-path solver: flood a distance field, then descend.

    fit() expands the wave (stopping at the destination unless
    ``stop_at_destination=False``), transform() returns the resulting
    cost field, and predict() backtracks path(s) according to ``mode``
    ("first" for one path, "all" for every tie up to ``max_paths``).
    """

    def __init__(
        self,
        corner_rule: "CornerRule | str" = "allow",
        stop_at_destination: bool = True,
        mode: str = "first",
        max_paths: int = 64,
    ):
        self.corner_rule = corner_rule
        self.stop_at_destination = stop_at_destination
        self.mode = mode
        self.max_paths = max_paths

    def fit(self, X, y=None) -> "WavefrontSolver":
        grid = self._coerced(X)
        outcome = flood(grid, self._rule, stop_at_destination=self.stop_at_destination)
        self.grid_ = grid
        self.cost_field_ = outcome.field
        self.trace_ = outcome.trace
        self.iterations_run_ = outcome.iterations_run
        self.reached_destination_ = outcome.reached_destination
        return self

    def transform(self, X=None) -> CostField:
        self._fitted_grid(X)
        return self.cost_field_

    def fit_transform(self, X, y=None) -> CostField:
        return self.fit(X, y).transform()

    def predict(self, X=None) -> PathSet:
        grid = self._fitted_grid(X)
        return backtrack(
            self.cost_field_,
            grid,
            rule=self._rule,
            mode=self.mode,
            max_paths=self.max_paths,
        )


class _SearchSolver(BaseSolver):
    """Shared fit/predict for the single-path best-first searches."""

    def _search(self, grid: GridMap) -> SearchResult:
        raise NotImplementedError

    def fit(self, X, y=None) -> "_SearchSolver":
        grid = self._coerced(X)
        try:
            result = self._search(grid)
        except NoPathError as exc:
            result = exc.result
        self.grid_ = grid
        self.result_ = result
        self.expansions_ = result.expansions
        self.path_ = result.path
        self.reached_destination_ = result.path is not None
        return self

    def predict(self, X=None) -> PathSet:
        self._fitted_grid(X)
        if self.path_ is None:
            raise NoPathError(
                f"no route to {self.grid_.destination}", result=self.result_
            )
        return PathSet((self.path_,), truncated=False)


class DijkstraSolver(_SearchSolver):
    """Uniform-cost search over the same 8-connected unit-cost grid."""

    def __init__(self, corner_rule: "CornerRule | str" = "allow"):
        self.corner_rule = corner_rule

    def _search(self, grid: GridMap) -> SearchResult:
        return dijkstra(grid, self._rule)


class AStarSolver(_SearchSolver):
    """Heuristic best-first search; exact with the Chebyshev heuristic.

    The Euclidean heuristic overestimates remaining cost across diagonal
    runs (a diagonal step costs 1 but covers sqrt(2)), so that variant
    can return paths longer than optimal.
    """

    def __init__(
        self,
        corner_rule: "CornerRule | str" = "allow",
        heuristic: "Heuristic | str" = "chebyshev",
    ):
        self.corner_rule = corner_rule
        self.heuristic = heuristic

    def _search(self, grid: GridMap) -> SearchResult:
        return astar(grid, self._rule, Heuristic.coerce(self.heuristic))
