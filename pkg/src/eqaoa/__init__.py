"""QAOA statevector simulation with S_d- and Z_d-equivariant mixers."""

__version__ = "0.1.0"

from .errors import (
    EncodingError,
    EqaoaError,
    GraphError,
    GraphParseError,
    OptimizerError,
    ResourceLimitError,
)
from .graphs import BUILTIN_GRAPHS, Graph, builtin_graph, parse_edge_list
from .mixers import MixerKind, distinguished_state, single_qudit_matrix, verify_extremal
from .objective import (
    DiagonalObservable,
    Encoding,
    ProblemSpec,
    build_diagonal,
    edge_coloring_spec,
    objective_value,
    partition_spec,
)
from .schedule import OptimizerSettings, TrialRecord, layerwise_run
from .simulator import Params, exact_expectation, run_qaoa, sample
from .stats import SampleSet, fixture, summarize, t_test

__all__ = [
    "__version__",
    "EqaoaError",
    "GraphError",
    "GraphParseError",
    "EncodingError",
    "ResourceLimitError",
    "OptimizerError",
    "Graph",
    "BUILTIN_GRAPHS",
    "builtin_graph",
    "parse_edge_list",
    "Encoding",
    "ProblemSpec",
    "DiagonalObservable",
    "edge_coloring_spec",
    "partition_spec",
    "objective_value",
    "build_diagonal",
    "MixerKind",
    "single_qudit_matrix",
    "distinguished_state",
    "verify_extremal",
    "Params",
    "run_qaoa",
    "sample",
    "exact_expectation",
    "OptimizerSettings",
    "TrialRecord",
    "layerwise_run",
    "SampleSet",
    "summarize",
    "t_test",
    "fixture",
]
