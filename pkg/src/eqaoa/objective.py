"""Color encodings, the two classical objectives, and their diagonals.

Qubit layout used everywhere in the package: unit ``u`` (an edge for
coloring, a vertex for partitioning) owns qubits ``[u*ell, (u+1)*ell)``;
inside a unit the lower qubit is the less significant color bit, and the
global basis index is ``sum(bit(q) << q)``. Equivalently the basis index is
``sum(color[u] * d**u)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence, Union

import numpy as np

from .errors import EncodingError, ResourceLimitError
from .graphs import Graph, adjacent_edge_pairs, max_degree

__all__ = [
    "Encoding",
    "ProblemSpec",
    "DiagonalObservable",
    "edge_coloring_spec",
    "partition_spec",
    "chi",
    "decode",
    "encode",
    "bits_to_index",
    "index_to_bits",
    "format_bits",
    "unit_colors",
    "edge_coloring_value",
    "partition_value",
    "objective_value",
    "build_diagonal",
    "classify_class_one",
    "DEFAULT_MAX_QUBITS",
]

DEFAULT_MAX_QUBITS = 24

Bitstring = Union[int, np.integer, Sequence[int], str]


@dataclass(frozen=True)
class Encoding:
    ell: int
    num_units: int

    def __post_init__(self):
        if self.ell < 1:
            raise EncodingError(f"ell must be >= 1, got {self.ell}")
        if self.num_units < 0:
            raise EncodingError("num_units must be nonnegative")

    @property
    def d(self) -> int:
        return 1 << self.ell

    @property
    def total_qubits(self) -> int:
        return self.num_units * self.ell

    @property
    def dim(self) -> int:
        return 1 << self.total_qubits

    @classmethod
    def from_dimension(cls, d: int, num_units: int) -> "Encoding":
        if d < 2 or d & (d - 1):
            raise EncodingError(f"dimension {d} is not a power of two >= 2")
        return cls(d.bit_length() - 1, num_units)


@dataclass(frozen=True)
class ProblemSpec:
    kind: str  # "edge_coloring" | "partition"
    graph: Graph
    encoding: Encoding
    penalty: float | None = None

    def __post_init__(self):
        if self.kind == "edge_coloring":
            if self.encoding.num_units != self.graph.num_edges:
                raise EncodingError("edge coloring needs one unit per edge")
        elif self.kind == "partition":
            if self.encoding.num_units != self.graph.num_vertices:
                raise EncodingError("partitioning needs one unit per vertex")
            if self.graph.num_vertices % self.encoding.d:
                raise EncodingError(
                    f"{self.encoding.d} parts do not divide {self.graph.num_vertices} vertices"
                )
            if self.penalty is None:
                object.__setattr__(self, "penalty", float(self.graph.num_edges))
        else:
            raise ValueError(f"unknown problem kind {self.kind!r}")


def edge_coloring_spec(graph: Graph, ell: int = 2) -> ProblemSpec:
    return ProblemSpec("edge_coloring", graph, Encoding(ell, graph.num_edges))


def partition_spec(graph: Graph, ell: int = 2, penalty: float | None = None) -> ProblemSpec:
    """Balanced partition into ``2**ell`` parts; penalty defaults to the edge count."""
    return ProblemSpec("partition", graph, Encoding(ell, graph.num_vertices), penalty)


@dataclass(frozen=True, eq=False)
class DiagonalObservable:
    """Values of the objective on every basis index (the problem Hamiltonian)."""

    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return len(self.values)

    @cached_property
    def levels(self) -> tuple[np.ndarray, np.ndarray]:
        """Distinct values and the inverse index map, for fast phase tables."""
        return np.unique(self.values, return_inverse=True)

    def phases(self, gamma: float) -> np.ndarray:
        """``exp(-i gamma values)`` evaluated once per distinct value."""
        uniq, inverse = self.levels
        return np.exp(-1j * gamma * uniq)[inverse]


# -- bitstrings -------------------------------------------------------------

def bits_to_index(bits: Sequence[int]) -> int:
    """Basis index of a bit sequence given in qubit order (``bits[q]`` is qubit q)."""
    idx = 0
    for q, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"bit {q} is {b!r}, expected 0 or 1")
        idx |= int(b) << q
    return idx


def index_to_bits(index: int, nqubits: int) -> list[int]:
    return [(int(index) >> q) & 1 for q in range(nqubits)]


def format_bits(index: int, nqubits: int) -> str:
    """Qubit-0-first bit string, e.g. ``format_bits(1, 3) == "100"``."""
    return "".join(str(b) for b in index_to_bits(index, nqubits))


def _as_index(x: Bitstring, nqubits: int) -> int:
    if isinstance(x, (int, np.integer)):
        idx = int(x)
        if not 0 <= idx < (1 << nqubits):
            raise ValueError(f"basis index {idx} out of range for {nqubits} qubits")
        return idx
    if isinstance(x, str):
        x = [int(c) for c in x]
    if len(x) != nqubits:
        raise ValueError(f"bitstring has length {len(x)}, expected {nqubits}")
    return bits_to_index(x)


def decode(x: Bitstring, enc: Encoding) -> list[int]:
    """Per-unit colors; bit ``i`` of unit ``u`` is bit ``i`` of its color index."""
    idx = _as_index(x, enc.total_qubits)
    mask = enc.d - 1
    return [(idx >> (u * enc.ell)) & mask for u in range(enc.num_units)]


def encode(colors: Sequence[int], enc: Encoding) -> int:
    if len(colors) != enc.num_units:
        raise ValueError("one color per unit required")
    idx = 0
    for u, c in enumerate(colors):
        if not 0 <= c < enc.d:
            raise ValueError(f"color {c} out of range for d={enc.d}")
        idx |= int(c) << (u * enc.ell)
    return idx


def unit_colors(indices: np.ndarray, enc: Encoding, unit: int) -> np.ndarray:
    """Vectorized color of one unit over an array of basis indices."""
    return (np.asarray(indices) >> (unit * enc.ell)) & (enc.d - 1)


# -- objectives -------------------------------------------------------------

def chi(c: Sequence[int], cprime: Sequence[int]) -> int:
    """Indicator that two colors given as bit tuples are equal.

    Evaluated as the product over bits of ``c_i e_i + (1 - c_i)(1 - e_i)``.
    """
    if len(c) != len(cprime):
        raise ValueError("color bit tuples must have equal length")
    out = 1
    for ci, ei in zip(c, cprime):
        out *= ci * ei + (1 - ci) * (1 - ei)
    return int(out)


def edge_coloring_value(spec: ProblemSpec, x: Bitstring) -> int:
    """Number of adjacent edge pairs sharing a color."""
    if spec.kind != "edge_coloring":
        raise ValueError("not an edge-coloring spec")
    colors = decode(x, spec.encoding)
    return sum(colors[i] == colors[j] for i, j in adjacent_edge_pairs(spec.graph))


def _partition_terms(spec: ProblemSpec, colors):
    """Vectorization-friendly pieces of the partition objective.

    ``colors`` is a list indexed by vertex of scalars or equal-shape arrays.
    """
    same = sum((colors[u] == colors[v]) * 1.0 for u, v in spec.graph.edges)
    a = b0 = b1 = 0.0
    for c in colors:
        v0 = c & 1
        v1 = (c >> 1) & 1
        a = a + (v0 - 0.5)
        b0 = b0 + (1 - v0) * (v1 - 0.5)
        b1 = b1 + v0 * (v1 - 0.5)
    w = 2.0 * spec.penalty
    return -same + (w * a) ** 2 + (w * b0) ** 2 + (w * b1) ** 2


def partition_value(spec: ProblemSpec, x: Bitstring) -> float:
    """Negated count of same-part adjacent pairs plus three squared balance penalties."""
    if spec.kind != "partition":
        raise ValueError("not a partition spec")
    if spec.encoding.ell != 2:
        raise EncodingError("partition objective is defined for ell == 2 only")
    return float(_partition_terms(spec, decode(x, spec.encoding)))


def objective_value(spec: ProblemSpec, x: Bitstring) -> float:
    if spec.kind == "edge_coloring":
        return float(edge_coloring_value(spec, x))
    return partition_value(spec, x)


def build_diagonal(spec: ProblemSpec, max_qubits: int = DEFAULT_MAX_QUBITS) -> DiagonalObservable:
    enc = spec.encoding
    if enc.total_qubits > max_qubits:
        raise ResourceLimitError(
            f"{enc.total_qubits} qubits exceeds the cap of {max_qubits}"
        )
    idx = np.arange(enc.dim, dtype=np.int64)
    if spec.kind == "edge_coloring":
        values = np.zeros(enc.dim)
        cache: dict[int, np.ndarray] = {}

        def col(u):
            if u not in cache:
                cache[u] = unit_colors(idx, enc, u)
            return cache[u]

        for i, j in adjacent_edge_pairs(spec.graph):
            values += col(i) == col(j)
        return DiagonalObservable(values)
    if enc.ell != 2:
        raise EncodingError("partition objective is defined for ell == 2 only")
    colors = [unit_colors(idx, enc, u) for u in range(enc.num_units)]
    values = np.broadcast_to(_partition_terms(spec, colors), (enc.dim,))
    return DiagonalObservable(np.array(values, dtype=float))


def classify_class_one(spec: ProblemSpec, samples) -> str:
    """``"found_proper"`` if a sample is a proper coloring with exactly max-degree colors."""
    if spec.kind != "edge_coloring":
        raise ValueError("class-one detection applies to edge coloring only")
    if spec.encoding.d != max_degree(spec.graph):
        return "not_found"
    for x in samples:
        if edge_coloring_value(spec, x) == 0:
            return "found_proper"
    return "not_found"
