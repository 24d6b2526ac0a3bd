"""Benchmark harness: run algorithms side by side and collect counters.

Counters (iterations, expansions, cells touched) are the comparable
quantities; elapsed wall time is recorded for context but is never a
correctness signal, and the serializers omit it by default so suite
output stays byte-reproducible.

The wavefront and the searches count different work units -- an
iteration costs a whole frontier, an expansion settles one cell -- so
each record also carries cells_costed / cells_touched, which are
directly comparable.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .errors import GridWaveError, NoPathError
from .grid import CellKind, CornerRule, GridMap
from .mapgen import GenSpec, generate_map
from .solvers import AStarSolver, DijkstraSolver, WavefrontSolver
from .validation import ensure_destination
from .wavefront import full_flood_component

WAVEFRONT = "wavefront"
DIJKSTRA = "dijkstra"
ASTAR_CHEBYSHEV = "astar-chebyshev"
ASTAR_EUCLIDEAN = "astar-euclidean"

#: Every algorithm the harness knows, in canonical report order.
ALL_ALGOS = (WAVEFRONT, DIJKSTRA, ASTAR_CHEBYSHEV, ASTAR_EUCLIDEAN)

#: Algorithms guaranteed to return an optimal path (Euclidean A* is not).
EXACT_ALGOS = (WAVEFRONT, DIJKSTRA, ASTAR_CHEBYSHEV)

#: Counter fields eligible for suite aggregation, in column order.
NUMERIC_FIELDS = (
    "iterations",
    "cells_costed",
    "expansions",
    "cells_touched",
    "path_length",
    "path_count",
)


@dataclass(frozen=True)
class AlgoRecord:
    """Counters from one algorithm on one map.

    The wavefront fills iterations / cells_costed / path_count; the
    searches fill expansions / cells_touched.  path_length is None when
    the destination was unreachable.
    """

    algo: str
    path_length: int | None
    elapsed_us: int
    iterations: int | None = None
    cells_costed: int | None = None
    path_count: int | None = None
    expansions: int | None = None
    cells_touched: int | None = None


@dataclass(frozen=True)
class ComparisonReport:
    """All requested algorithms run once on one map."""

    width: int
    height: int
    seed: int | None
    records: tuple[AlgoRecord, ...]


@dataclass(frozen=True)
class SuiteReport:
    """Per-map reports for a whole spec list, in spec order."""

    reports: tuple[ComparisonReport, ...]

    def aggregates(self) -> dict:
        """Mean and median of each counter, per algorithm, over the suite.

        Unreachable-map records contribute nothing to path_length; a
        counter absent from every record is omitted.
        """
        by_algo: dict[str, dict[str, list]] = {}
        for report in self.reports:
            for record in report.records:
                fields = by_algo.setdefault(record.algo, {})
                for name in NUMERIC_FIELDS:
                    value = getattr(record, name)
                    if value is not None:
                        fields.setdefault(name, []).append(value)
        return {
            algo: {
                name: {
                    "mean": statistics.mean(values),
                    "median": statistics.median(values),
                }
                for name, values in fields.items()
            }
            for algo, fields in by_algo.items()
        }


@dataclass(frozen=True)
class ComplexityCounters:
    """Measured analogs of the quantities an asymptotic comparison uses.

    nodes_total is the traversable cell count, obstacles_count the
    obstacle cell count, steps_to_destination the optimal depth (None if
    unreachable), expansions the uniform-cost settled count, and
    cells_costed the exhaustive wavefront's finite count.
    """

    nodes_total: int
    obstacles_count: int
    steps_to_destination: int | None
    expansions: int
    cells_costed: int
    iterations_run: int


def _unknown_algo(name: str) -> GridWaveError:
    return ValueError(f"unknown algorithm {name!r}; expected one of {ALL_ALGOS}")


def _run_wavefront(grid, rule, mode, max_paths) -> AlgoRecord:
    solver = WavefrontSolver(corner_rule=rule, mode=mode, max_paths=max_paths)
    started = time.perf_counter_ns()
    solver.fit(grid)
    if solver.reached_destination_:
        paths = solver.predict()
        elapsed = time.perf_counter_ns() - started
        return AlgoRecord(
            algo=WAVEFRONT,
            path_length=paths[0].length,
            elapsed_us=elapsed // 1000,
            iterations=solver.iterations_run_,
            cells_costed=solver.cost_field_.finite_count(),
            path_count=paths.count,
        )
    elapsed = time.perf_counter_ns() - started
    return AlgoRecord(
        algo=WAVEFRONT,
        path_length=None,
        elapsed_us=elapsed // 1000,
        iterations=solver.iterations_run_,
        cells_costed=solver.cost_field_.finite_count(),
        path_count=0,
    )


def _run_search(grid, rule, algo: str) -> AlgoRecord:
    if algo == DIJKSTRA:
        solver = DijkstraSolver(corner_rule=rule)
    elif algo == ASTAR_CHEBYSHEV:
        solver = AStarSolver(corner_rule=rule, heuristic="chebyshev")
    elif algo == ASTAR_EUCLIDEAN:
        solver = AStarSolver(corner_rule=rule, heuristic="euclidean")
    else:
        raise _unknown_algo(algo)
    started = time.perf_counter_ns()
    solver.fit(grid)
    elapsed = time.perf_counter_ns() - started
    path = solver.path_
    return AlgoRecord(
        algo=algo,
        path_length=path.length if path is not None else None,
        elapsed_us=elapsed // 1000,
        expansions=solver.expansions_,
        cells_touched=len(solver.result_.visited),
    )


def compare(
    grid: GridMap,
    algos: tuple = ALL_ALGOS,
    rule: "CornerRule | str" = CornerRule.ALLOW,
    mode: str = "first",
    max_paths: int = 64,
    seed: int | None = None,
) -> ComparisonReport:
    """Run each selected algorithm once on ``grid`` and collect counters.

    The map must have a destination.  An unreachable destination is not
    an error: the affected records simply carry path_length None.  The
    optimal algorithms are cross-checked against each other and a
    disagreement raises GridWaveError, since it can only mean a bug.
    """
    ensure_destination(grid)
    rule = CornerRule.coerce(rule)
    for algo in algos:
        if algo not in ALL_ALGOS:
            raise _unknown_algo(algo)
    records = []
    for algo in algos:
        if algo == WAVEFRONT:
            records.append(_run_wavefront(grid, rule, mode, max_paths))
        else:
            records.append(_run_search(grid, rule, algo))

    exact_lengths = {
        record.path_length for record in records if record.algo in EXACT_ALGOS
    }
    if len(exact_lengths) > 1:
        raise GridWaveError(
            f"optimal algorithms disagree on path length: {sorted(map(str, exact_lengths))}"
        )
    return ComparisonReport(grid.width, grid.height, seed, tuple(records))


def run_suite(
    specs,
    algos: tuple = ALL_ALGOS,
    rule: "CornerRule | str" = CornerRule.ALLOW,
    mode: str = "first",
    max_paths: int = 64,
    max_attempts: int = 100,
) -> SuiteReport:
    """Generate a map per spec and compare the algorithms on each.

    Deterministic: identical specs yield identical reports (timing
    aside).  Raises ValueError on an empty spec list and propagates
    UnsatisfiableError from generation.
    """
    specs = tuple(specs)
    if not specs:
        raise ValueError("run_suite needs at least one spec")
    rule = CornerRule.coerce(rule)
    reports = []
    for spec in specs:
        grid = generate_map(spec, rule, max_attempts=max_attempts)
        reports.append(
            compare(grid, algos, rule, mode=mode, max_paths=max_paths, seed=spec.seed)
        )
    return SuiteReport(tuple(reports))


def measure_complexity(grid: GridMap, rule: "CornerRule | str" = CornerRule.ALLOW) -> ComplexityCounters:
    """Exhaustive-flood and uniform-cost counters for one map."""
    ensure_destination(grid)
    rule = CornerRule.coerce(rule)
    outcome = full_flood_component(grid, rule)
    destination_cost = outcome.field.at(grid.destination)
    try:
        expansions = DijkstraSolver(corner_rule=rule).fit(grid).expansions_
    except NoPathError as exc:  # pragma: no cover - fit() stores, never raises
        expansions = exc.result.expansions
    return ComplexityCounters(
        nodes_total=grid.traversable_count(),
        obstacles_count=grid.count(CellKind.OBSTACLE),
        steps_to_destination=destination_cost if isinstance(destination_cost, int) else None,
        expansions=expansions,
        cells_costed=outcome.field.finite_count(),
        iterations_run=outcome.iterations_run,
    )


def genspec_range(width: int, height: int, density: float, seeds, require_solvable: bool = False):
    """GenSpecs for a seed range -- convenience for suite construction."""
    return tuple(
        GenSpec(width, height, density, seed, require_solvable) for seed in seeds
    )
