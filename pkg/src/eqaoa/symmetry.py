"""Color-permutation actions, brute-force centralizers, the Z_d eigenspace
decomposition, and Perron-Frobenius certification."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Sequence

import numpy as np
from scipy.sparse.csgraph import connected_components

from .mixers import MixerKind
from .objective import DiagonalObservable, Encoding, ProblemSpec, build_diagonal
from .simulator import Params, run_qaoa

__all__ = [
    "Permutation",
    "PermutationRep",
    "cyclic_shift",
    "apply_rep",
    "rep_matrix",
    "commutes",
    "centralizer_in_Sd",
    "is_subgroup",
    "root_of_unity",
    "zd_components",
    "zd_component_norms",
    "zd_projector",
    "check_qaoa_invariance",
    "PFReport",
    "perron_frobenius_check",
    "COMMUTE_TOL",
]

COMMUTE_TOL = 1e-10
CENTRALIZER_MAX_D = 8


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @property
    def d(self) -> int:
        return len(self.images)

    def __call__(self, c: int) -> int:
        return self.images[c]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``: apply ``other`` first."""
        return Permutation(tuple(self.images[other.images[c]] for c in range(self.d)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.d
        for c, img in enumerate(self.images):
            inv[img] = c
        return Permutation(tuple(inv))

    def power(self, k: int) -> "Permutation":
        out = Permutation(tuple(range(self.d)))
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            out = base.compose(out)
        return out

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls(tuple(range(d)))


def cyclic_shift(d: int) -> Permutation:
    """The generator ``c -> c + 1 mod d`` of Z_d."""
    return Permutation(tuple((c + 1) % d for c in range(d)))


@dataclass(frozen=True)
class PermutationRep:
    """A color permutation acting simultaneously on every unit of a register."""

    perm: Permutation
    num_units: int = 1

    @property
    def encoding(self) -> Encoding:
        return Encoding.from_dimension(self.perm.d, self.num_units)

    def index_map(self) -> np.ndarray:
        """Image basis index of every basis index."""
        enc = self.encoding
        idx = np.arange(enc.dim)
        images = np.asarray(self.perm.images)
        out = np.zeros(enc.dim, dtype=np.int64)
        for u in range(enc.num_units):
            colors = (idx >> (u * enc.ell)) & (enc.d - 1)
            out |= images[colors] << (u * enc.ell)
        return out


def apply_rep(rep: PermutationRep, state: np.ndarray) -> np.ndarray:
    state = np.asarray(state)
    target = rep.index_map()
    if state.shape[0] != target.size:
        raise ValueError("state dimension does not match the representation")
    out = np.zeros_like(state)
    out[target] = state
    return out


def rep_matrix(rep: PermutationRep) -> np.ndarray:
    target = rep.index_map()
    mat = np.zeros((target.size, target.size))
    mat[target, np.arange(target.size)] = 1.0
    return mat


def _as_matrix(op, dim: int) -> np.ndarray:
    if callable(op):
        eye = np.eye(dim, dtype=complex)
        return np.column_stack([op(eye[:, k]) for k in range(dim)])
    return np.asarray(op)


def commutes(op: "np.ndarray | Callable", rep: PermutationRep, tol: float = COMMUTE_TOL) -> bool:
    """``max|A P - P A| <= tol``; ``op`` is a dense matrix or a state -> state map."""
    p = rep_matrix(rep)
    a = _as_matrix(op, p.shape[0])
    if a.shape != p.shape:
        raise ValueError(f"operator shape {a.shape} does not match representation {p.shape}")
    return bool(np.max(np.abs(a @ p - p @ a)) <= tol)


def centralizer_in_Sd(a: np.ndarray, d: int, tol: float = COMMUTE_TOL) -> list[Permutation]:
    """All color permutations whose single-qudit matrix commutes with ``a``."""
    if d > CENTRALIZER_MAX_D:
        raise ValueError(f"brute force over S_{d} is capped at d={CENTRALIZER_MAX_D}")
    a = np.asarray(a)
    if a.shape != (d, d):
        raise ValueError(f"expected a {d}x{d} single-qudit operator")
    found = []
    for images in permutations(range(d)):
        p = np.zeros((d, d))
        p[list(images), range(d)] = 1.0
        if np.max(np.abs(a @ p - p @ a)) <= tol:
            found.append(Permutation(images))
    return found


def is_subgroup(perms: Sequence[Permutation]) -> bool:
    """Closed under composition and inverses, and nonempty."""
    pool = set(perms)
    if not pool:
        return False
    return all(p.inverse() in pool for p in pool) and all(
        p.compose(q) in pool for p in pool for q in pool
    )


# -- Z_d eigenspaces ---------------------------------------------------------

def root_of_unity(m: int, d: int) -> complex:
    """``exp(2 pi i m / d)``, exact at multiples of a quarter turn."""
    m %= d
    if (4 * m) % d == 0:
        return (1, 1j, -1, -1j)[4 * m // d]
    return complex(np.exp(2j * np.pi * m / d))


def zd_components(state: np.ndarray, enc: Encoding) -> list[np.ndarray]:
    """Projections onto the eigenspaces W_j of the simultaneous cyclic shift."""
    d = enc.d
    rep = PermutationRep(cyclic_shift(d), enc.num_units)
    target = rep.index_map()
    orbit = [np.asarray(state, dtype=complex)]
    for _ in range(d - 1):
        nxt = np.zeros_like(orbit[-1])
        nxt[target] = orbit[-1]
        orbit.append(nxt)
    comps = []
    for j in range(d):
        acc = np.zeros_like(orbit[0])
        for k in range(d):
            acc = acc + root_of_unity(-j * k, d) * orbit[k]
        comps.append(acc / d)
    return comps


def zd_component_norms(state: np.ndarray, enc: Encoding) -> np.ndarray:
    return np.array([np.linalg.norm(c) for c in zd_components(state, enc)])


def zd_projector(j: int, enc: Encoding) -> np.ndarray:
    """Dense projector onto W_j (small registers only)."""
    g = rep_matrix(PermutationRep(cyclic_shift(enc.d), enc.num_units))
    out = np.zeros_like(g, dtype=complex)
    power = np.eye(g.shape[0])
    for k in range(enc.d):
        out += root_of_unity(-j * k, enc.d) * power
        power = g @ power
    return out / enc.d


def check_qaoa_invariance(
    spec: ProblemSpec,
    kind,
    params: Params,
    diagonal: DiagonalObservable | None = None,
) -> float:
    """Squared norm that the QAOA output puts outside its mixer's eigenspace.

    The S_d mixer starts (and should stay) in W_0, the Z_d mixer in W_{d/2}.
    """
    kind = MixerKind.parse(kind)
    if kind is MixerKind.ClassicalB:
        raise ValueError("invariance is only claimed for the equivariant mixers")
    if diagonal is None:
        diagonal = build_diagonal(spec)
    enc = spec.encoding
    state = run_qaoa(spec, kind, params, diagonal=diagonal)
    home = 0 if kind is MixerKind.EquivariantM else enc.d // 2
    norms = zd_component_norms(state, enc)
    return float(sum(norms[j] ** 2 for j in range(enc.d) if j != home))


# -- Perron-Frobenius -------------------------------------------------------

@dataclass(frozen=True)
class PFReport:
    nonnegative: bool
    irreducible: bool
    extremal_positive: bool
    spectral_gap: float

    @property
    def passes(self) -> bool:
        return self.nonnegative and self.irreducible and self.extremal_positive


def perron_frobenius_check(a: np.ndarray) -> PFReport:
    """Check the hypotheses and conclusions of Perron-Frobenius on ``a``.

    Irreducibility is decided on the sparsity digraph; a 1x1 matrix counts as
    irreducible iff its entry is nonzero.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("square matrix required")
    n = a.shape[0]
    nonneg = bool(np.all(a >= -1e-12))
    pattern = np.abs(a) > 1e-12
    if n == 1:
        irreducible = bool(pattern[0, 0])
    else:
        ncomp, _ = connected_components(pattern.astype(int), directed=True, connection="strong")
        irreducible = ncomp == 1
    if np.allclose(a, a.T):
        vals, vecs = np.linalg.eigh(a)
        top = len(vals) - 1
        rest = np.delete(vals, top)
    else:
        vals, vecs = np.linalg.eig(a)
        top = int(np.argmax(vals.real))
        rest = np.delete(vals, top).real
    r = vals[top].real
    vec = vecs[:, top].real
    if vec.sum() < 0:
        vec = -vec
    vec = vec / np.linalg.norm(vec)
    positive = bool(np.all(vec >= 1e-12))
    gap = float(r - rest.max()) if rest.size else float("inf")
    return PFReport(nonneg, irreducible, positive, gap)
