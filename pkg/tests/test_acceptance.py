"""End-to-end acceptance gate.

Nine checks, each printing one PASS/FAIL verdict line in the terminal
summary: oracle equivalence of the flooded field, path optimality,
exhaustive tie enumeration, iteration parity on open maps, the frozen
concave-pocket counter pair, unreachability reporting, determinism of
repeated runs, format round-trip fidelity, and heuristic behavior.
The pocket counters are exact regression values with zero tolerance.
"""

from __future__ import annotations

import functools
import time

import jsonschema
import pytest

from conftest import (
    ACCEPTANCE_VERDICTS,
    BOTH_RULES,
    FIXTURE_DIR,
    FIXTURE_NAMES,
    SOLVABLE_FIXTURES,
    brute_force_descents,
    fixture_map,
    fixture_text,
    wall_off_destination,
)
from gridwave import (
    Coord,
    GenSpec,
    GridMap,
    NoPathError,
    SplitMix64,
    astar,
    backtrack,
    bfs8_distance_field,
    dijkstra,
    flood,
    generate_map,
    parse_map,
    render_map,
    run_suite,
    serialize,
)
from gridwave.cli import main
from gridwave.serialize import TRACE_SCHEMA

POOL_SPECS = tuple(GenSpec(30, 30, 0.2, seed) for seed in range(1, 201))


@pytest.fixture(scope="module")
def pool() -> tuple[GridMap, ...]:
    return tuple(generate_map(spec) for spec in POOL_SPECS)


def criterion(number: int, label: str):
    """Record one PASS/FAIL verdict line for an acceptance check."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                ACCEPTANCE_VERDICTS.append(f"{number}. {label}: FAIL")
                raise
            ACCEPTANCE_VERDICTS.append(f"{number}. {label}: PASS")

        return run

    return wrap


def _chebyshev(a: Coord, b: Coord) -> int:
    return max(abs(a.row - b.row), abs(a.col - b.col))


def _traversable_count(grid: GridMap) -> int:
    return sum(
        grid.is_traversable(Coord(row, col))
        for row in range(grid.height)
        for col in range(grid.width)
    )


@criterion(1, "full flood equals the breadth-first oracle on 200 generated maps")
def test_oracle_equivalence(pool):
    started = time.perf_counter()
    for grid in pool:
        for rule in BOTH_RULES:
            outcome = flood(grid, rule=rule, stop_at_destination=False)
            assert outcome.field == bfs8_distance_field(grid, rule=rule)
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"oracle sweep took {elapsed:.1f}s"


@criterion(2, "backtrack, Dijkstra, and oracle lengths agree; descents ascend by one")
def test_optimality(pool):
    solvable = 0
    for grid in pool:
        for rule in BOTH_RULES:
            oracle = bfs8_distance_field(grid, rule=rule)
            if not oracle.is_finite(grid.destination):
                continue
            solvable += 1
            want = oracle.at(grid.destination)
            outcome = flood(grid, rule=rule)
            assert outcome.reached_destination
            paths = backtrack(outcome.field, grid, rule=rule, mode="all", max_paths=32)
            assert paths.count >= 1
            assert dijkstra(grid, rule=rule).path.length == want
            for path in paths:
                assert path.length == want
                assert path.cells[0] == grid.source
                assert path.cells[-1] == grid.destination
                for position, cell in enumerate(path.cells):
                    assert outcome.field.at(cell) == position
    assert solvable >= 100, f"only {solvable} solvable runs in the pool"


@criterion(3, "mode=all equals brute-force descent enumeration on small fixtures")
def test_tie_enumeration():
    checked = []
    for name in FIXTURE_NAMES:
        grid = fixture_map(name)
        if _traversable_count(grid) > 25:
            continue
        checked.append(name)
        for rule in BOTH_RULES:
            field = flood(grid, rule=rule, stop_at_destination=False).field
            expected = brute_force_descents(field, grid, rule)
            if not expected:
                with pytest.raises(NoPathError):
                    backtrack(field, grid, rule=rule, mode="all", max_paths=10**6)
                continue
            got = backtrack(field, grid, rule=rule, mode="all", max_paths=10**6)
            assert not got.truncated
            assert {tuple(path.cells) for path in got} == expected
            if name == "forked":
                assert got.count == 2
    assert set(checked) == {"room", "detour", "forked", "sealed", "euclid_trap"}


@criterion(4, "iterations equal the Chebyshev distance on obstacle-free maps")
def test_open_map_parity():
    size = 20
    interior = [
        Coord(row, col) for row in range(1, size - 1) for col in range(1, size - 1)
    ]
    rng = SplitMix64(20)
    for _ in range(50):
        source = interior[rng.randrange(len(interior))]
        destination = source
        while destination == source:
            destination = interior[rng.randrange(len(interior))]
        rows = []
        for row in range(size):
            line = []
            for col in range(size):
                if row in (0, size - 1) or col in (0, size - 1):
                    line.append("#")
                elif Coord(row, col) == source:
                    line.append("S")
                elif Coord(row, col) == destination:
                    line.append("D")
                else:
                    line.append(".")
            rows.append("".join(line))
        grid = parse_map("\n".join(rows) + "\n")
        outcome = flood(grid)
        assert outcome.reached_destination
        assert outcome.iterations_run == _chebyshev(source, destination)
        assert outcome.field.at(destination) == _chebyshev(source, destination)


@criterion(5, "concave pocket: wavefront iterations stay below A*-Euclidean expansions")
def test_pocket_counter_gap():
    grid = fixture_map("pocket")
    outcome = flood(grid)
    result = astar(grid, heuristic="euclidean")
    assert outcome.reached_destination
    assert outcome.iterations_run == 15
    assert result.expansions == 62
    assert outcome.iterations_run < result.expansions


@criterion(6, "unreachable destinations: honest reporting, oracle-exact region, exit 1")
def test_unreachability(pool, tmp_path):
    cases = [fixture_map("sealed")]
    for grid in pool:
        if len(cases) == 21:
            break
        if _chebyshev(grid.source, grid.destination) < 2:
            continue
        cases.append(wall_off_destination(grid))
    assert len(cases) == 21
    for grid in cases:
        for rule in BOTH_RULES:
            oracle = bfs8_distance_field(grid, rule=rule)
            assert not oracle.is_finite(grid.destination)
            outcome = flood(grid, rule=rule)
            assert not outcome.reached_destination
            assert outcome.field == oracle
    assert main(["solve", str(FIXTURE_DIR / "sealed.map")]) == 1
    walled_file = tmp_path / "walled.map"
    walled_file.write_text(render_map(cases[1]), encoding="utf-8")
    assert main(["solve", str(walled_file)]) == 1


@criterion(7, "repeated suite runs and seeded generation are byte-identical")
def test_determinism(tmp_path):
    specs = tuple(GenSpec(14, 11, 0.25, seed, True) for seed in range(1, 6))
    first = run_suite(specs)
    second = run_suite(specs)
    assert serialize.to_json(serialize.suite_to_dict(first), pretty=True) == (
        serialize.to_json(serialize.suite_to_dict(second), pretty=True)
    )
    assert serialize.suite_to_csv(first) == serialize.suite_to_csv(second)
    for spec in specs:
        assert render_map(generate_map(spec)) == render_map(generate_map(spec))
    gen_argv = ["gen", "--width", "12", "--height", "9", "--seed", "7", "--solvable"]
    files = [tmp_path / "first.map", tmp_path / "second.map"]
    for file in files:
        assert main([*gen_argv, "--out", str(file)]) == 0
    assert files[0].read_bytes() == files[1].read_bytes()


@criterion(8, "maps round-trip byte-for-byte; all fixture traces validate")
def test_format_fidelity():
    for name in FIXTURE_NAMES:
        text = fixture_text(name)
        assert render_map(parse_map(text)) == text
        grid = parse_map(text)
        for rule in BOTH_RULES:
            for stop in (True, False):
                trace = flood(grid, rule=rule, stop_at_destination=stop).trace
                data = serialize.trace_to_dict(trace)
                jsonschema.validate(data, TRACE_SCHEMA)
                assert serialize.trace_from_dict(data) == trace


@criterion(9, "Chebyshev A* is exact everywhere; Euclidean overshoots on the trap")
def test_heuristic_behavior(pool):
    grids = [fixture_map(name) for name in FIXTURE_NAMES] + list(pool)
    for grid in grids:
        for rule in BOTH_RULES:
            try:
                base = dijkstra(grid, rule=rule).path.length
            except NoPathError:
                with pytest.raises(NoPathError):
                    astar(grid, rule=rule, heuristic="chebyshev")
                continue
            assert astar(grid, rule=rule, heuristic="chebyshev").path.length == base
    trap = fixture_map("euclid_trap")
    optimum = dijkstra(trap).path.length
    euclidean = astar(trap, heuristic="euclidean").path.length
    assert optimum == 4
    assert euclidean == 5
    assert euclidean > optimum
