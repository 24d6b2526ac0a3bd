"""gridwave: grid shortest paths by wavefront expansion, with baselines.

The core algorithm floods a distance field outward from the source --
every cell's cost is the iteration at which the wave first reached it --
then recovers shortest paths by descending the field from the
destination.  Dijkstra, A* (Chebyshev or Euclidean), and a BFS oracle
are included for cross-checking and benchmarking, along with a
deterministic map generator, an ASCII trace renderer, and a CLI
(``gridwave solve|compare|gen|render``).
"""

from .backtrack import backtrack, descend_candidates
from .baselines import Heuristic, SearchResult, astar, bfs8_distance_field, dijkstra
from .bench import (
    ALL_ALGOS,
    AlgoRecord,
    ComparisonReport,
    ComplexityCounters,
    GenSpec,
    SuiteReport,
    compare,
    measure_complexity,
    run_suite,
)
from .costs import INFINITY, UNREACHED, CostField
from .errors import (
    DimensionMismatchError,
    GridWaveError,
    MapFormatError,
    MissingCostError,
    MultipleDestinationsError,
    MultipleSourcesError,
    NoPathError,
    NoSourceError,
    NotFittedError,
    RaggedRowsError,
    UnknownSymbolError,
    UnsatisfiableError,
)
from .grid import (
    OFFSETS_CLOCKWISE,
    CellKind,
    Coord,
    CornerRule,
    GridMap,
    neighbors8,
    parse_map,
    render_map,
    step_allowed,
)
from .mapgen import SplitMix64, generate_map
from .paths import Path, PathSet
from .render import Frame, FrameSequence, render_cost_field, render_path_overlay, render_trace
from .solvers import AStarSolver, DijkstraSolver, WavefrontSolver
from .wavefront import (
    FloodOutcome,
    FloodTrace,
    IterationRecord,
    flood,
    full_flood_component,
    ring_cells,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_ALGOS",
    "AStarSolver",
    "AlgoRecord",
    "CellKind",
    "ComparisonReport",
    "ComplexityCounters",
    "Coord",
    "CornerRule",
    "CostField",
    "DijkstraSolver",
    "DimensionMismatchError",
    "FloodOutcome",
    "FloodTrace",
    "Frame",
    "FrameSequence",
    "GenSpec",
    "GridMap",
    "GridWaveError",
    "Heuristic",
    "INFINITY",
    "IterationRecord",
    "MapFormatError",
    "MissingCostError",
    "MultipleDestinationsError",
    "MultipleSourcesError",
    "NoPathError",
    "NoSourceError",
    "NotFittedError",
    "OFFSETS_CLOCKWISE",
    "Path",
    "PathSet",
    "RaggedRowsError",
    "SearchResult",
    "SplitMix64",
    "SuiteReport",
    "UNREACHED",
    "UnknownSymbolError",
    "UnsatisfiableError",
    "WavefrontSolver",
    "astar",
    "backtrack",
    "bfs8_distance_field",
    "compare",
    "descend_candidates",
    "dijkstra",
    "flood",
    "full_flood_component",
    "generate_map",
    "measure_complexity",
    "neighbors8",
    "parse_map",
    "render_cost_field",
    "render_map",
    "render_path_overlay",
    "render_trace",
    "ring_cells",
    "run_suite",
    "step_allowed",
    "__version__",
]
