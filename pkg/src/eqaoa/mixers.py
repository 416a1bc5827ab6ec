"""The classical transverse-field mixer and the two equivariant mixers.

Both equivariant single-qudit matrices are diagonal in the Hadamard frame:
one frame entry is ``d(d-1)/2`` and the remaining ``d-1`` entries equal
``(d-1)(d-2)/2 - 1``. Dropping that constant leaves a single nonzero entry
``d``, so the mixer exponential only phases one frame vector. For the
S_d-equivariant mixer that vector is the uniform one (frame index 0); for the
Z_d-equivariant mixer it is the alternating vector ``(-1)**c``, i.e. a ``|->``
on the least significant color bit (frame index 1).

The distinguished state of each mixer is its unique *largest* eigenvector.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import eigsh

from .errors import EncodingError, ResourceLimitError
from .objective import Encoding

__all__ = [
    "MixerKind",
    "SingleQuditMixer",
    "hadamard",
    "qudit_b_matrix",
    "single_qudit_matrix",
    "distinguished_state",
    "full_mixer_matrix",
    "ExtremalReport",
    "verify_extremal",
]

_FRAME_TOL = 1e-12
VERIFY_MAX_QUBITS = 12


class MixerKind(enum.Enum):
    ClassicalB = "b"
    EquivariantM = "hm"
    EquivariantChi = "hchi"

    @classmethod
    def parse(cls, value: "str | MixerKind") -> "MixerKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            names = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown mixer {value!r}; expected one of {names}") from None


def _ell_of(d: int) -> int:
    if d < 2 or d & (d - 1):
        raise EncodingError(f"dimension {d} is not a power of two >= 2")
    return d.bit_length() - 1


def hadamard(ell: int, normalized: bool = True) -> np.ndarray:
    """``ell``-fold Hadamard; with ``normalized=False`` the +-1 Sylvester matrix."""
    h = np.array([[1.0]])
    base = np.array([[1.0, 1.0], [1.0, -1.0]])
    for _ in range(ell):
        h = np.kron(h, base)
    return h / np.sqrt(h.shape[0]) if normalized else h


def qudit_b_matrix(d: int) -> np.ndarray:
    """Single-qudit form of the classical mixer: the sum of X over the ``ell`` bits."""
    ell = _ell_of(d)
    x = np.array([[0.0, 1.0], [1.0, 0.0]])
    out = np.zeros((d, d))
    for bit in range(ell):
        # bit 0 is the least significant, i.e. the rightmost Kronecker factor
        term = np.kron(np.kron(np.eye(1 << (ell - 1 - bit)), x), np.eye(1 << bit))
        out += term
    return out


@dataclass(frozen=True, eq=False)
class SingleQuditMixer:
    kind: MixerKind
    d: int
    matrix: np.ndarray
    frame_diagonal: np.ndarray
    reduced_diagonal: np.ndarray

    @property
    def ell(self) -> int:
        return self.d.bit_length() - 1

    @property
    def frame_index(self) -> int:
        """Frame basis index carrying the nonzero reduced-diagonal entry."""
        return int(np.argmax(self.reduced_diagonal))

    @property
    def scalar_shift(self) -> float:
        return (self.d - 1) * (self.d - 2) / 2 - 1


def _equivariant_matrix(kind: MixerKind, d: int) -> np.ndarray:
    idx = np.arange(d)
    if kind is MixerKind.EquivariantM:
        m = np.ones((d, d))
    elif kind is MixerKind.EquivariantChi:
        m = (-1.0) ** (idx[:, None] + idx[None, :])
    else:
        raise ValueError("the classical mixer has no equivariant single-qudit matrix")
    np.fill_diagonal(m, comb(d - 1, 2))
    return m


def single_qudit_matrix(kind: "MixerKind | str", d: int) -> SingleQuditMixer:
    kind = MixerKind.parse(kind)
    if kind is MixerKind.ClassicalB:
        raise ValueError("use qudit_b_matrix for the classical mixer")
    ell = _ell_of(d)
    m = _equivariant_matrix(kind, d)
    # +-1 Sylvester form keeps the conjugation in exact integer arithmetic
    h = hadamard(ell, normalized=False)
    framed = h @ m @ h / d
    off = framed - np.diag(np.diag(framed))
    if np.max(np.abs(off)) > _FRAME_TOL:
        raise AssertionError("Hadamard frame failed to diagonalize the mixer")
    frame_diag = np.diag(framed).copy()
    shift = (d - 1) * (d - 2) / 2 - 1
    return SingleQuditMixer(kind, d, m, frame_diag, frame_diag - shift)


def distinguished_state(kind: "MixerKind | str", enc: Encoding) -> np.ndarray:
    """Uniform superposition, or for the Z_d mixer the same with a ``|->`` on qubit 0."""
    kind = MixerKind.parse(kind)
    amp = 2.0 ** (-enc.total_qubits / 2)
    state = np.full(enc.dim, amp, dtype=complex)
    if kind is MixerKind.EquivariantChi:
        state[1::2] *= -1
    return state


def _unit_matrices(kind: MixerKind, enc: Encoding) -> list[np.ndarray]:
    d = enc.d
    if kind is MixerKind.ClassicalB:
        return [qudit_b_matrix(d)] * enc.num_units
    hm = _equivariant_matrix(MixerKind.EquivariantM, d)
    mats = [hm] * enc.num_units
    if kind is MixerKind.EquivariantChi and enc.num_units:
        mats = [_equivariant_matrix(MixerKind.EquivariantChi, d)] + mats[1:]
    return mats


def full_mixer_matrix(kind: "MixerKind | str", enc: Encoding, sparse: bool = False):
    """Kronecker sum of the per-unit matrices over the whole register.

    Unit ``u`` carries weight ``d**u`` in the basis index, so it is the
    ``u``-th factor counted from the right.
    """
    kind = MixerKind.parse(kind)
    d, n = enc.d, enc.num_units
    total = sp.csr_matrix((enc.dim, enc.dim))
    for u, m in enumerate(_unit_matrices(kind, enc)):
        left = sp.identity(d ** (n - 1 - u), format="csr")
        right = sp.identity(d**u, format="csr")
        total = total + sp.kron(sp.kron(left, sp.csr_matrix(m)), right, format="csr")
    return total if sparse else total.toarray()


@dataclass(frozen=True)
class ExtremalReport:
    extremal_value: float
    gap: float
    match_error: float


def verify_extremal(kind: "MixerKind | str", enc: Encoding) -> ExtremalReport:
    """Top eigenpair of the full mixer versus the distinguished state."""
    kind = MixerKind.parse(kind)
    if enc.total_qubits > VERIFY_MAX_QUBITS:
        raise ResourceLimitError(
            f"{enc.total_qubits} qubits exceeds the eigensolver cap of {VERIFY_MAX_QUBITS}"
        )
    if enc.dim <= 256:
        vals, vecs = np.linalg.eigh(full_mixer_matrix(kind, enc))
        top, second, vec = vals[-1], (vals[-2] if len(vals) > 1 else -np.inf), vecs[:, -1]
    else:
        a = full_mixer_matrix(kind, enc, sparse=True)
        v0 = np.random.default_rng(0).uniform(-1, 1, enc.dim)
        vals, vecs = eigsh(a, k=2, which="LA", tol=0, v0=v0)
        order = np.argsort(vals)
        top, second, vec = vals[order[-1]], vals[order[0]], vecs[:, order[-1]]
    ref = distinguished_state(kind, enc).real
    vec = vec / np.linalg.norm(vec)
    err = min(np.linalg.norm(vec - ref), np.linalg.norm(vec + ref))
    return ExtremalReport(float(top), float(top - second), float(err))
