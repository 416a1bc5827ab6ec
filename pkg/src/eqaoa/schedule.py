"""Layer-wise QAOA training.

Depth 1 starts from ``(beta, gamma)`` drawn uniformly from
``[0, pi/4] x [0, 2 pi]``. Every later depth starts from the previous
optimum with a zero layer appended, so in exact mode the recorded energies
can only go down.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.optimize import minimize

from .errors import OptimizerError
from .mixers import MixerKind
from .objective import DiagonalObservable, ProblemSpec, build_diagonal, format_bits
from .simulator import DEFAULT_SHOTS, Params, energy_estimate, exact_expectation, run_qaoa, sample

__all__ = [
    "OptimizerSettings",
    "TrialRecord",
    "nelder_mead",
    "objective_for",
    "layerwise_run",
    "BETA_WINDOW",
    "GAMMA_WINDOW",
    "DEFAULT_PMAX",
]

BETA_WINDOW = (0.0, 0.25 * np.pi)
GAMMA_WINDOW = (0.0, 2.0 * np.pi)
DEFAULT_PMAX = {"edge_coloring": 9, "partition": 7}


@dataclass(frozen=True)
class OptimizerSettings:
    # E is flat (= its uniform-state value) on the whole line gamma = pi, and
    # depth-1 starts near it settle there. A wide first simplex reaches past
    # that valley; with small steps, shot noise collapses the simplex inside it.
    max_evals: int = 300
    simplex_init_step: float = 2.0
    convergence_tol: float = 1e-6

    def to_dict(self) -> dict:
        return {
            "max_evals": self.max_evals,
            "simplex_init_step": self.simplex_init_step,
            "convergence_tol": self.convergence_tol,
        }


def nelder_mead(f: Callable[[np.ndarray], float], x0, settings: OptimizerSettings | None = None):
    """Minimize ``f`` from ``x0``; returns ``(best point, best value)``.

    Standard coefficients (reflection 1, expansion 2, contraction 0.5,
    shrink 0.5). ``x0`` is a vertex of the initial simplex, so the result is
    never worse than ``f(x0)``. Stops on ``max_evals`` or when both the
    simplex values and the vertex coordinates spread by less than
    ``convergence_tol`` (a value test alone stops early on a simplex that
    straddles the minimum symmetrically).
    """
    settings = settings or OptimizerSettings()
    x0 = np.asarray(x0, dtype=float).reshape(-1)
    k = x0.size
    if k < 1:
        raise ValueError("need at least one parameter")
    if settings.max_evals < k + 1:
        raise ValueError(f"max_evals={settings.max_evals} cannot fill a {k + 1}-vertex simplex")

    def checked(x):
        val = float(f(x))
        if not np.isfinite(val):
            raise OptimizerError(f"objective returned {val} at {np.array2string(x)}")
        return val

    simplex = np.vstack([x0, x0 + settings.simplex_init_step * np.eye(k)])
    res = minimize(
        checked,
        x0,
        method="Nelder-Mead",
        options={
            "initial_simplex": simplex,
            "maxfev": settings.max_evals,
            "maxiter": 10**9,
            "fatol": settings.convergence_tol,
            "xatol": settings.convergence_tol,
            "adaptive": False,
        },
    )
    return np.asarray(res.x, dtype=float), float(res.fun)


class _Objective:
    """Energy of a parameter vector; sampled mode draws fresh shots per call.

    The ``i``-th sampled evaluation uses the generator seeded with
    ``(seed, i)``, so runs replay exactly from the seed.
    """

    def __init__(self, spec, kind, mode, shots, seed, diagonal):
        self.spec = spec
        self.kind = MixerKind.parse(kind)
        self.mode = mode
        self.shots = shots
        self.seed = seed
        self.diagonal = diagonal if diagonal is not None else build_diagonal(spec)
        self.calls = 0

    def state(self, params: Params) -> np.ndarray:
        return run_qaoa(self.spec, self.kind, params, diagonal=self.diagonal)

    def __call__(self, params) -> float:
        if not isinstance(params, Params):
            params = Params.from_vector(params)
        state = self.state(params)
        call = self.calls
        self.calls += 1
        if self.mode == "exact":
            return exact_expectation(state, self.diagonal)
        rng = np.random.default_rng([self.seed, call])
        return energy_estimate(sample(state, self.shots, rng), self.spec, self.diagonal)


def objective_for(
    spec: ProblemSpec,
    kind,
    mode: str = "exact",
    seed: int = 0,
    shots: int = DEFAULT_SHOTS,
    diagonal: DiagonalObservable | None = None,
) -> Callable:
    """Energy as a function of :class:`Params` (or a flat parameter vector)."""
    if mode not in ("exact", "sampled"):
        raise ValueError(f"mode must be 'exact' or 'sampled', got {mode!r}")
    return _Objective(spec, kind, mode, shots, seed, diagonal)


@dataclass
class TrialRecord:
    seed: int
    mode: str
    shots: int
    depth_energies: list[float]
    final_params: Params
    best_sample: str
    best_value: float
    evaluations: int = 0
    depth_params: list[Params] = field(default_factory=list)

    @property
    def final_energy(self) -> float:
        return self.depth_energies[-1]

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "mode": self.mode,
            "shots": self.shots,
            "depth_energies": list(self.depth_energies),
            "final_params": {
                "betas": self.final_params.betas.tolist(),
                "gammas": self.final_params.gammas.tolist(),
            },
            "best_sample": self.best_sample,
            "best_value": self.best_value,
            "evaluations": self.evaluations,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TrialRecord":
        fp = data["final_params"]
        return cls(
            seed=data["seed"],
            mode=data["mode"],
            shots=data["shots"],
            depth_energies=list(data["depth_energies"]),
            final_params=Params(gammas=fp["gammas"], betas=fp["betas"]),
            best_sample=data["best_sample"],
            best_value=data["best_value"],
            evaluations=data.get("evaluations", 0),
        )

    def __eq__(self, other):
        if not isinstance(other, TrialRecord):
            return NotImplemented
        return self.to_dict() == other.to_dict()


def layerwise_run(
    spec: ProblemSpec,
    kind,
    pmax: int | None = None,
    mode: str = "exact",
    seed: int = 0,
    shots: int = DEFAULT_SHOTS,
    settings: OptimizerSettings | None = None,
    diagonal: DiagonalObservable | None = None,
) -> TrialRecord:
    """One independent training campaign from depth 1 to ``pmax``.

    The depth-``p`` search re-optimizes all ``2p`` angles. The recorded
    energy of each depth is the optimizer's best value; after the last depth
    ``shots`` strings are drawn at the final angles to report the best one.
    """
    kind = MixerKind.parse(kind)
    pmax = DEFAULT_PMAX[spec.kind] if pmax is None else pmax
    if pmax < 1:
        raise ValueError("pmax must be >= 1")
    settings = settings or OptimizerSettings()
    rng = np.random.default_rng(seed)
    beta1 = rng.uniform(*BETA_WINDOW)
    gamma1 = rng.uniform(*GAMMA_WINDOW)
    objective = objective_for(spec, kind, mode, seed=seed, shots=shots, diagonal=diagonal)

    x = np.array([beta1, gamma1])
    energies, history = [], []
    for p in range(1, pmax + 1):
        if p > 1:
            x = np.concatenate([x, [0.0, 0.0]])
        x, value = nelder_mead(objective, x, settings)
        energies.append(value)
        history.append(Params.from_vector(x))

    final = history[-1]
    shots_rng = np.random.default_rng([seed, 2**32 - 1])
    outcomes = sample(objective.state(final), shots, shots_rng)
    values = objective.diagonal.values[outcomes]
    best = int(np.argmin(values))
    return TrialRecord(
        seed=seed,
        mode=mode,
        shots=shots,
        depth_energies=energies,
        final_params=final,
        best_sample=format_bits(int(outcomes[best]), spec.encoding.total_qubits),
        best_value=float(values[best]),
        evaluations=objective.calls,
        depth_params=history,
    )
