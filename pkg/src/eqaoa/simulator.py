"""Exact statevector QAOA engine.

A state is a complex numpy vector of length ``2**total_qubits`` indexed with
the layout described in :mod:`eqaoa.objective`. Viewed as an array of shape
``(d,) * n`` in C order, unit ``u`` lives on axis ``n - 1 - u``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .mixers import MixerKind, distinguished_state, hadamard, single_qudit_matrix
from .objective import (
    DiagonalObservable,
    Encoding,
    ProblemSpec,
    _as_index,
    build_diagonal,
    objective_value,
)

__all__ = [
    "Params",
    "init_state",
    "apply_phase_separator",
    "apply_mixer",
    "qudit_unitary",
    "run_qaoa",
    "sample",
    "energy_estimate",
    "exact_expectation",
    "DEFAULT_SHOTS",
]

DEFAULT_SHOTS = 1024
_KIND_NAMES = frozenset(k.value for k in MixerKind)


@dataclass(frozen=True, eq=False)
class Params:
    """Per-layer angles; layer ``i`` applies ``gammas[i]`` then ``betas[i]``."""

    gammas: np.ndarray = field(default_factory=lambda: np.zeros(0))
    betas: np.ndarray = field(default_factory=lambda: np.zeros(0))

    def __post_init__(self):
        g = np.array(self.gammas, dtype=float).reshape(-1)
        b = np.array(self.betas, dtype=float).reshape(-1)
        if g.shape != b.shape:
            raise ValueError(f"{g.size} gammas but {b.size} betas")
        object.__setattr__(self, "gammas", g)
        object.__setattr__(self, "betas", b)

    @property
    def p(self) -> int:
        return self.gammas.size

    def to_vector(self) -> np.ndarray:
        """Flatten as ``(beta_1, gamma_1, beta_2, gamma_2, ...)``."""
        out = np.empty(2 * self.p)
        out[0::2] = self.betas
        out[1::2] = self.gammas
        return out

    @classmethod
    def from_vector(cls, vec) -> "Params":
        vec = np.asarray(vec, dtype=float)
        if vec.size % 2:
            raise ValueError("parameter vector must have even length")
        return cls(gammas=vec[1::2], betas=vec[0::2])

    def extended(self, extra: int = 1) -> "Params":
        """Append ``extra`` zero layers."""
        z = np.zeros(extra)
        return Params(np.concatenate([self.gammas, z]), np.concatenate([self.betas, z]))

    def __eq__(self, other):
        if not isinstance(other, Params):
            return NotImplemented
        return np.array_equal(self.gammas, other.gammas) and np.array_equal(self.betas, other.betas)


def init_state(start, enc: Encoding) -> np.ndarray:
    """Distinguished state of a mixer, or a computational basis state.

    ``start`` is a :class:`MixerKind` (or its config name) or a bitstring
    (basis index, 0/1 sequence in qubit order, or a string of 0/1).
    """
    if isinstance(start, MixerKind) or (isinstance(start, str) and start in _KIND_NAMES):
        return distinguished_state(start, enc)
    idx = _as_index(start, enc.total_qubits)
    state = np.zeros(enc.dim, dtype=complex)
    state[idx] = 1.0
    return state


def apply_phase_separator(state: np.ndarray, diagonal, gamma: float) -> np.ndarray:
    if not isinstance(diagonal, DiagonalObservable):
        diagonal = DiagonalObservable(diagonal)
    if diagonal.values.shape != state.shape:
        raise ValueError("state and diagonal lengths differ")
    if gamma == 0:
        return state.copy()
    return state * diagonal.phases(gamma)


@lru_cache(maxsize=None)
def _reduced_diagonal(kind: MixerKind, d: int) -> np.ndarray:
    return single_qudit_matrix(kind, d).reduced_diagonal


@lru_cache(maxsize=None)
def _sylvester(ell: int) -> np.ndarray:
    return hadamard(ell, normalized=False)


def qudit_unitary(kind: "MixerKind | str", d: int, beta: float, first_unit: bool = False) -> np.ndarray:
    """d x d mixer exponential acting on one qudit.

    Equivariant kinds: Hadamard frame, phase by the reduced diagonal, inverse
    frame. The Z_d mixer only changes unit 0 (``first_unit=True``); every
    other unit uses the S_d-equivariant block.
    """
    kind = MixerKind.parse(kind)
    ell = d.bit_length() - 1
    if kind is MixerKind.ClassicalB:
        rx = np.array([[np.cos(beta), -1j * np.sin(beta)], [-1j * np.sin(beta), np.cos(beta)]])
        u = np.array([[1.0 + 0j]])
        for _ in range(ell):
            u = np.kron(u, rx)
        return u
    if kind is MixerKind.EquivariantChi and not first_unit:
        kind = MixerKind.EquivariantM
    h = _sylvester(ell)
    phases = np.exp(-1j * beta * _reduced_diagonal(kind, d))
    return (h * phases) @ h / d


def _apply_on_unit(state: np.ndarray, mat: np.ndarray, unit: int) -> np.ndarray:
    """Apply a k x k matrix to the digit of weight ``k**unit`` in the basis index."""
    k = mat.shape[0]
    high = state.size // (k ** (unit + 1))
    return np.matmul(mat, state.reshape(high, k, k**unit)).reshape(-1)


def apply_mixer(state: np.ndarray, kind: "MixerKind | str", beta: float, enc: Encoding) -> np.ndarray:
    kind = MixerKind.parse(kind)
    if state.shape != (enc.dim,):
        raise ValueError("state length does not match the encoding")
    if beta == 0 or enc.num_units == 0:
        return state.copy()
    # for the classical mixer each qudit block is the ell-fold product of
    # cos(beta) I - i sin(beta) X, i.e. the rotation on every qubit
    bulk = qudit_unitary(kind, enc.d, beta)
    for u in range(enc.num_units):
        first = u == 0 and kind is MixerKind.EquivariantChi
        mat = qudit_unitary(kind, enc.d, beta, first_unit=True) if first else bulk
        state = _apply_on_unit(state, mat, u)
    return state


def run_qaoa(
    spec: ProblemSpec,
    kind: "MixerKind | str",
    params: Params,
    *,
    diagonal: DiagonalObservable | None = None,
    start=None,
) -> np.ndarray:
    """Apply ``p`` layers (phase separator, then mixer) to the start state.

    ``start`` defaults to the mixer's distinguished state; pass a bitstring
    for a warm start from a basis state.
    """
    kind = MixerKind.parse(kind)
    enc = spec.encoding
    if diagonal is None:
        diagonal = build_diagonal(spec)
    state = init_state(kind if start is None else start, enc)
    for gamma, beta in zip(params.gammas, params.betas):
        state = apply_phase_separator(state, diagonal, gamma)
        state = apply_mixer(state, kind, beta, enc)
    return state


def _as_generator(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


def sample(state: np.ndarray, m: int, rng) -> np.ndarray:
    """``m`` measurement outcomes as basis indices."""
    if m < 1:
        raise ValueError("shot count must be >= 1")
    probs = np.abs(state) ** 2
    probs = probs / probs.sum()
    return _as_generator(rng).choice(probs.size, size=m, p=probs)


def energy_estimate(samples, spec: ProblemSpec, diagonal: DiagonalObservable | None = None) -> float:
    """Mean objective value over measured strings."""
    samples = np.asarray(samples)
    if samples.size == 0:
        raise ValueError("energy estimate needs at least one sample")
    if diagonal is not None:
        return float(np.mean(diagonal.values[samples]))
    return float(np.mean([objective_value(spec, int(x)) for x in samples]))


def exact_expectation(state: np.ndarray, diagonal) -> float:
    values = diagonal.values if isinstance(diagonal, DiagonalObservable) else np.asarray(diagonal)
    if values.shape != state.shape:
        raise ValueError("state and diagonal lengths differ")
    return float(np.dot(np.abs(state) ** 2, values))
