"""JSON wire formats, their schemas, and the CSV export.

Every coordinate serializes as a two-element ``[row, col]`` array.  The
``*_SCHEMA`` constants are JSON Schema documents for the formats below;
the test suite validates emitted JSON against them, and they are the
normative description of the wire format.

Suite and report serialization omits elapsed wall time unless asked
(``include_timing=True``): timing varies run to run, and suite output is
promised to be byte-identical for identical inputs.
"""

from __future__ import annotations

import csv
import io
import json

from .baselines import SearchResult
from .bench import ComparisonReport, SuiteReport
from .grid import Coord
from .paths import Path, PathSet
from .wavefront import FloodTrace, IterationRecord

_COORD_SCHEMA = {
    "type": "array",
    "items": {"type": "integer", "minimum": 0},
    "minItems": 2,
    "maxItems": 2,
}

TRACE_SCHEMA = {
    "type": "object",
    "required": ["width", "height", "iterations"],
    "additionalProperties": False,
    "properties": {
        "width": {"type": "integer", "minimum": 1},
        "height": {"type": "integer", "minimum": 1},
        "iterations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["k", "costed", "new_sources"],
                "additionalProperties": False,
                "properties": {
                    "k": {"type": "integer", "minimum": 1},
                    "costed": {"type": "array", "items": _COORD_SCHEMA, "minItems": 1},
                    "new_sources": {"type": "array", "items": _COORD_SCHEMA},
                },
            },
        },
    },
}

PATH_SCHEMA = {
    "type": "object",
    "required": ["length", "cells"],
    "additionalProperties": False,
    "properties": {
        "length": {"type": "integer", "minimum": 0},
        "cells": {"type": "array", "items": _COORD_SCHEMA, "minItems": 1},
    },
}

PATHSET_SCHEMA = {
    "type": "object",
    "required": ["count", "truncated", "paths"],
    "additionalProperties": False,
    "properties": {
        "count": {"type": "integer", "minimum": 0},
        "truncated": {"type": "boolean"},
        "paths": {"type": "array", "items": PATH_SCHEMA},
    },
}

SEARCH_RESULT_SCHEMA = {
    "type": "object",
    "required": ["algo", "expansions", "path"],
    "additionalProperties": False,
    "properties": {
        "algo": {"type": "string", "enum": ["dijkstra", "astar"]},
        "heuristic": {"type": "string", "enum": ["chebyshev", "euclidean"]},
        "expansions": {"type": "integer", "minimum": 0},
        "path": {"anyOf": [PATH_SCHEMA, {"type": "null"}]},
    },
}

_RECORD_SCHEMA = {
    "type": "object",
    "required": ["algo", "path_length"],
    "additionalProperties": False,
    "properties": {
        "algo": {
            "type": "string",
            "enum": ["wavefront", "dijkstra", "astar-chebyshev", "astar-euclidean"],
        },
        "iterations": {"type": "integer", "minimum": 0},
        "cells_costed": {"type": "integer", "minimum": 1},
        "expansions": {"type": "integer", "minimum": 0},
        "cells_touched": {"type": "integer", "minimum": 1},
        "path_length": {"anyOf": [{"type": "integer", "minimum": 0}, {"type": "null"}]},
        "path_count": {"type": "integer", "minimum": 0},
        "elapsed_us": {"type": "integer", "minimum": 0},
    },
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["map", "results"],
    "additionalProperties": False,
    "properties": {
        "map": {
            "type": "object",
            "required": ["width", "height", "seed"],
            "additionalProperties": False,
            "properties": {
                "width": {"type": "integer", "minimum": 1},
                "height": {"type": "integer", "minimum": 1},
                "seed": {"anyOf": [{"type": "integer"}, {"type": "null"}]},
            },
        },
        "results": {"type": "array", "items": _RECORD_SCHEMA},
    },
}

SUITE_SCHEMA = {
    "type": "object",
    "required": ["reports", "aggregates"],
    "additionalProperties": False,
    "properties": {
        "reports": {"type": "array", "items": REPORT_SCHEMA},
        "aggregates": {"type": "object"},
    },
}

#: Column order shared by the record JSON and the CSV export.
_RECORD_FIELDS = (
    "iterations",
    "cells_costed",
    "expansions",
    "cells_touched",
    "path_length",
    "path_count",
)


def _coord_list(cells) -> list:
    return [[int(row), int(col)] for row, col in cells]


def _parse_coord(value, width: int | None = None, height: int | None = None) -> Coord:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(part, int) and not isinstance(part, bool) for part in value)
    ):
        raise ValueError(f"expected a [row, col] integer pair, got {value!r}")
    at = Coord(value[0], value[1])
    if at.row < 0 or at.col < 0:
        raise ValueError(f"coordinate {value!r} is negative")
    if height is not None and (at.row >= height or at.col >= width):
        raise ValueError(f"coordinate {value!r} is outside a {width}x{height} grid")
    return at


def _require(data, key: str, kind, what: str):
    if not isinstance(data, dict):
        raise ValueError(f"{what} must be a JSON object, got {type(data).__name__}")
    if key not in data:
        raise ValueError(f"{what} is missing the {key!r} key")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is int:
        raise ValueError(f"{what} key {key!r} must be {kind.__name__}, got {value!r}")
    return value


def trace_to_dict(trace: FloodTrace) -> dict:
    """Exact wire form; costed and new-source cells sorted row-major."""
    return {
        "width": trace.width,
        "height": trace.height,
        "iterations": [
            {
                "k": record.k,
                "costed": _coord_list(sorted(record.costed)),
                "new_sources": _coord_list(sorted(record.new_sources)),
            }
            for record in trace.iterations
        ],
    }


def trace_from_dict(data: dict) -> FloodTrace:
    """Inverse of trace_to_dict; raises ValueError on malformed input."""
    width = _require(data, "width", int, "trace")
    height = _require(data, "height", int, "trace")
    if width < 1 or height < 1:
        raise ValueError("trace dimensions must be positive")
    iterations = _require(data, "iterations", list, "trace")
    records = []
    seen: set[Coord] = set()
    for position, entry in enumerate(iterations, start=1):
        k = _require(entry, "k", int, f"iteration {position}")
        if k != position:
            raise ValueError(f"iteration numbers must ascend from 1; found k={k} at position {position}")
        costed = [
            _parse_coord(value, width, height)
            for value in _require(entry, "costed", list, f"iteration {k}")
        ]
        if not costed:
            raise ValueError(f"iteration {k} costed no cells")
        overlap = seen.intersection(costed)
        if overlap or len(set(costed)) != len(costed):
            raise ValueError(f"iteration {k} re-costs already costed cells")
        seen.update(costed)
        new_sources = [
            _parse_coord(value, width, height)
            for value in _require(entry, "new_sources", list, f"iteration {k}")
        ]
        if not set(new_sources) <= set(costed):
            raise ValueError(f"iteration {k} has new sources outside its costed set")
        records.append(IterationRecord(k, frozenset(costed), frozenset(new_sources)))
    return FloodTrace(width, height, tuple(records))


def path_to_dict(path: Path) -> dict:
    return {"length": path.length, "cells": _coord_list(path.cells)}


def path_from_dict(data: dict) -> Path:
    length = _require(data, "length", int, "path")
    cells = [_parse_coord(value) for value in _require(data, "cells", list, "path")]
    if not cells:
        raise ValueError("path has no cells")
    if length != len(cells) - 1:
        raise ValueError(f"path length {length} does not match its {len(cells)} cells")
    return Path(tuple(cells))


def pathset_to_dict(paths: PathSet) -> dict:
    return {
        "count": paths.count,
        "truncated": paths.truncated,
        "paths": [path_to_dict(path) for path in paths],
    }


def pathset_from_dict(data: dict) -> PathSet:
    count = _require(data, "count", int, "path set")
    truncated = _require(data, "truncated", bool, "path set")
    paths = tuple(path_from_dict(value) for value in _require(data, "paths", list, "path set"))
    if count != len(paths):
        raise ValueError(f"path set count {count} does not match its {len(paths)} paths")
    return PathSet(paths, truncated)


def search_result_to_dict(result: SearchResult, algo: str, heuristic: str | None = None) -> dict:
    """Wire form for one search run; ``heuristic`` appears only when given."""
    data: dict = {"algo": algo}
    if heuristic is not None:
        data["heuristic"] = heuristic
    data["expansions"] = result.expansions
    data["path"] = path_to_dict(result.path) if result.path is not None else None
    return data


def record_to_dict(record, include_timing: bool = False) -> dict:
    data: dict = {"algo": record.algo}
    for name in _RECORD_FIELDS:
        value = getattr(record, name)
        if value is not None or name == "path_length":
            data[name] = value
    if include_timing:
        data["elapsed_us"] = record.elapsed_us
    return data


def report_to_dict(report: ComparisonReport, include_timing: bool = False) -> dict:
    return {
        "map": {"width": report.width, "height": report.height, "seed": report.seed},
        "results": [record_to_dict(record, include_timing) for record in report.records],
    }


def suite_to_dict(suite: SuiteReport, include_timing: bool = False) -> dict:
    return {
        "reports": [report_to_dict(report, include_timing) for report in suite.reports],
        "aggregates": suite.aggregates(),
    }


def suite_to_csv(suite: SuiteReport, include_timing: bool = False) -> str:
    """One CSV row per (map, algorithm) pair, empty cells for absent counters."""
    columns = ["width", "height", "seed", "algo", *_RECORD_FIELDS]
    if include_timing:
        columns.append("elapsed_us")
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for report in suite.reports:
        for record in report.records:
            row = [report.width, report.height, _csv_cell(report.seed), record.algo]
            row += [_csv_cell(getattr(record, name)) for name in _RECORD_FIELDS]
            if include_timing:
                row.append(record.elapsed_us)
            writer.writerow(row)
    return out.getvalue()


def _csv_cell(value):
    return "" if value is None else value


def to_json(data, pretty: bool = False) -> str:
    """Compact JSON for pipes; pretty (indent 2, trailing newline) for files."""
    if pretty:
        return json.dumps(data, indent=2) + "\n"
    return json.dumps(data, separators=(",", ":"))
