"""Gate-level circuits for the phase separator and mixers.

Qubit ``q`` is bit ``q`` of the basis index, the same layout the simulator
uses, so :func:`unitary_of` matrices are directly comparable with simulator
actions. ``rz(t)`` is ``diag(exp(-it/2), exp(it/2))`` and ``mcp(t)`` multiplies
the all-ones configuration of its qubits by ``exp(it)``; an ``mcp`` on a
single qubit is a plain phase gate.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .errors import EncodingError, ResourceLimitError
from .graphs import adjacent_edge_pairs
from .mixers import MixerKind, single_qudit_matrix
from .objective import ProblemSpec

__all__ = [
    "Gate",
    "GateSequence",
    "zz_chain",
    "mixer_block",
    "phase_separator_circuit",
    "mixer_layer_circuit",
    "state_prep_circuit",
    "qaoa_circuit",
    "apply_sequence",
    "unitary_of",
    "equivalent_up_to_phase",
    "export_qasm",
    "parse_qasm",
    "UNITARY_MAX_QUBITS",
]

UNITARY_MAX_QUBITS = 10
_ONE_QUBIT = {"h", "x", "rz"}
_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_X = np.array([[0, 1], [1, 0]], dtype=complex)


@dataclass(frozen=True)
class Gate:
    name: str  # "h" | "x" | "rz" | "cx" | "mcp"
    qubits: tuple[int, ...]
    param: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "qubits", tuple(int(q) for q in self.qubits))
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"repeated qubit in {self.name} {self.qubits}")
        arity = {"h": 1, "x": 1, "rz": 1, "cx": 2}.get(self.name)
        if self.name == "mcp":
            if not self.qubits:
                raise ValueError("mcp needs at least a target qubit")
        elif arity is None:
            raise ValueError(f"unknown gate {self.name!r}")
        elif len(self.qubits) != arity:
            raise ValueError(f"{self.name} acts on {arity} qubit(s)")
        if self.name in ("rz", "mcp") and self.param is None:
            raise ValueError(f"{self.name} needs an angle")

    @property
    def controls(self) -> tuple[int, ...]:
        return self.qubits[:-1]

    @property
    def target(self) -> int:
        return self.qubits[-1]


@dataclass
class GateSequence:
    register_size: int
    gates: list[Gate] = field(default_factory=list)

    def append(self, gate: Gate) -> None:
        if max(gate.qubits) >= self.register_size or min(gate.qubits) < 0:
            raise ValueError(f"gate {gate} outside register of {self.register_size} qubits")
        self.gates.append(gate)

    def extend(self, other: "GateSequence") -> None:
        for g in other.gates:
            self.append(g)

    def count(self, name: str) -> int:
        return sum(g.name == name for g in self.gates)

    def __len__(self):
        return len(self.gates)


# -- builders ---------------------------------------------------------------

def zz_chain(qubits, beta: float, register_size: int | None = None) -> GateSequence:
    """``exp(-i beta Z...Z)`` via a CNOT ladder onto the last qubit."""
    qubits = [int(q) for q in qubits]
    if len(qubits) < 2 or len(set(qubits)) != len(qubits):
        raise ValueError("zz_chain needs at least two distinct qubits")
    seq = GateSequence(register_size if register_size is not None else max(qubits) + 1)
    ladder = [Gate("cx", (a, b)) for a, b in zip(qubits, qubits[1:])]
    for g in ladder:
        seq.append(g)
    seq.append(Gate("rz", (qubits[-1],), 2.0 * beta))
    for g in reversed(ladder):
        seq.append(g)
    return seq


def mixer_block(kind, qudit_qubits, beta: float, register_size: int | None = None) -> GateSequence:
    """One-qudit equivariant mixer exponential, up to global phase.

    Hadamards map the distinguished frame vector to a basis state; X gates on
    its zero bits turn it into the all-ones state, which the multi-controlled
    phase ``P(-d beta)`` picks out.
    """
    kind = MixerKind.parse(kind)
    qubits = [int(q) for q in qudit_qubits]
    ell = len(qubits)
    if ell < 1:
        raise ValueError("a qudit needs at least one qubit")
    d = 1 << ell
    frame_index = single_qudit_matrix(kind, d).frame_index
    flips = [q for i, q in enumerate(qubits) if not (frame_index >> i) & 1]
    seq = GateSequence(register_size if register_size is not None else max(qubits) + 1)
    for q in qubits:
        seq.append(Gate("h", (q,)))
    for q in flips:
        seq.append(Gate("x", (q,)))
    seq.append(Gate("mcp", tuple(qubits), -d * beta))
    for q in flips:
        seq.append(Gate("x", (q,)))
    for q in qubits:
        seq.append(Gate("h", (q,)))
    return seq


def _check_coloring_l2(spec: ProblemSpec):
    if spec.kind != "edge_coloring":
        raise EncodingError("the phase-separator circuit covers edge coloring only")
    if spec.encoding.ell != 2:
        raise EncodingError("the phase-separator circuit needs ell == 2")


def phase_separator_circuit(spec: ProblemSpec, gamma: float) -> GateSequence:
    """``exp(-i gamma H_P)`` up to global phase for 4-color edge coloring.

    Per adjacent pair ``[c(e) == c(f)] = (1 + ZZ + ZZ + ZZZZ) / 4``, so each of
    the three Pauli strings gets angle ``gamma / 4``.
    """
    _check_coloring_l2(spec)
    nq = spec.encoding.total_qubits
    seq = GateSequence(nq)
    for i, j in adjacent_edge_pairs(spec.graph):
        e0, e1, f0, f1 = 2 * i, 2 * i + 1, 2 * j, 2 * j + 1
        for chain in ([e0, f0], [e1, f1], [e0, f0, e1, f1]):
            seq.extend(zz_chain(chain, gamma / 4, nq))
    return seq


def mixer_layer_circuit(kind, spec: ProblemSpec, beta: float) -> GateSequence:
    kind = MixerKind.parse(kind)
    enc = spec.encoding
    nq = enc.total_qubits
    seq = GateSequence(nq)
    if kind is MixerKind.ClassicalB:
        # exp(-i beta X) = H exp(-i beta Z) H
        for q in range(nq):
            seq.append(Gate("h", (q,)))
            seq.append(Gate("rz", (q,), 2.0 * beta))
            seq.append(Gate("h", (q,)))
        return seq
    for u in range(enc.num_units):
        block_kind = kind if u == 0 else MixerKind.EquivariantM
        qubits = range(u * enc.ell, (u + 1) * enc.ell)
        seq.extend(mixer_block(block_kind, qubits, beta, nq))
    return seq


def state_prep_circuit(kind, spec: ProblemSpec) -> GateSequence:
    """Hadamard wall from ``|0...0>``, with qubit 0 flipped first for the Z_d mixer."""
    kind = MixerKind.parse(kind)
    nq = spec.encoding.total_qubits
    seq = GateSequence(nq)
    if kind is MixerKind.EquivariantChi and nq:
        seq.append(Gate("x", (0,)))
    for q in range(nq):
        seq.append(Gate("h", (q,)))
    return seq


def qaoa_circuit(spec: ProblemSpec, kind, params, include_prep: bool = True) -> GateSequence:
    _check_coloring_l2(spec)
    seq = GateSequence(spec.encoding.total_qubits)
    if include_prep:
        seq.extend(state_prep_circuit(kind, spec))
    for gamma, beta in zip(params.gammas, params.betas):
        seq.extend(phase_separator_circuit(spec, gamma))
        seq.extend(mixer_layer_circuit(kind, spec, beta))
    return seq


# -- simulation of gate sequences ------------------------------------------

def _one_qubit_matrix(g: Gate) -> np.ndarray:
    if g.name == "h":
        return _H
    if g.name == "x":
        return _X
    t = g.param
    return np.array([[np.exp(-0.5j * t), 0], [0, np.exp(0.5j * t)]])


def _apply_gate(block: np.ndarray, g: Gate, nq: int) -> np.ndarray:
    """Apply one gate to an array of shape ``(2**nq, batch)``."""
    dim, batch = block.shape
    if g.name in _ONE_QUBIT:
        q = g.qubits[0]
        view = block.reshape(dim >> (q + 1), 2, (1 << q) * batch)
        return np.matmul(_one_qubit_matrix(g), view).reshape(dim, batch)
    idx = np.arange(dim)
    if g.name == "cx":
        c, t = g.qubits
        perm = np.where((idx >> c) & 1, idx ^ (1 << t), idx)
        return block[perm]
    mask = 0
    for q in g.qubits:
        mask |= 1 << q
    hit = (idx & mask) == mask
    out = block.copy()
    out[hit] *= np.exp(1j * g.param)
    return out


def apply_sequence(seq: GateSequence, state: np.ndarray) -> np.ndarray:
    block = np.asarray(state, dtype=complex).reshape(1 << seq.register_size, -1)
    for g in seq.gates:
        block = _apply_gate(block, g, seq.register_size)
    return block.reshape(np.shape(state))


def unitary_of(seq: GateSequence) -> np.ndarray:
    if seq.register_size > UNITARY_MAX_QUBITS:
        raise ResourceLimitError(
            f"register of {seq.register_size} qubits exceeds the cap of {UNITARY_MAX_QUBITS}"
        )
    return apply_sequence(seq, np.eye(1 << seq.register_size, dtype=complex))


def equivalent_up_to_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-9) -> bool:
    """True iff ``a == exp(i phi) b`` entrywise within ``tol`` for some phi."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError("shapes differ")
    overlap = np.vdot(b, a) / a.shape[0]  # normalized tr(b^dagger a)
    if abs(overlap) < 1e-12:
        return False
    phase = overlap / abs(overlap)
    return bool(np.max(np.abs(a - phase * b)) <= tol)


# -- OpenQASM 2.0 -----------------------------------------------------------

def _fmt(x: float) -> str:
    return repr(float(x))


def export_qasm(seq: GateSequence) -> str:
    """OpenQASM 2.0 text; phases with two controls are decomposed into ``cu1``/``cx``."""
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{seq.register_size}];"]
    for g in seq.gates:
        q = g.qubits
        if g.name in ("h", "x"):
            lines.append(f"{g.name} q[{q[0]}];")
        elif g.name == "rz":
            lines.append(f"rz({_fmt(g.param)}) q[{q[0]}];")
        elif g.name == "cx":
            lines.append(f"cx q[{q[0]}],q[{q[1]}];")
        elif len(g.controls) == 0:
            lines.append(f"u1({_fmt(g.param)}) q[{g.target}];")
        elif len(g.controls) == 1:
            lines.append(f"cu1({_fmt(g.param)}) q[{q[0]}],q[{g.target}];")
        elif len(g.controls) == 2:
            c0, c1, t = q
            half = g.param / 2
            lines += [
                f"cu1({_fmt(half)}) q[{c1}],q[{t}];",
                f"cx q[{c0}],q[{c1}];",
                f"cu1({_fmt(-half)}) q[{c1}],q[{t}];",
                f"cx q[{c0}],q[{c1}];",
                f"cu1({_fmt(half)}) q[{c0}],q[{t}];",
            ]
        else:
            raise ValueError(
                f"controlled phase with {len(g.controls)} controls is not exportable (max 2)"
            )
    return "\n".join(lines) + "\n"


_STMT = re.compile(r"^(\w+)(?:\(([^)]*)\))?\s+(.*);$")
_QARG = re.compile(r"q\[(\d+)\]")


def parse_qasm(text: str) -> GateSequence:
    """Read back the subset of OpenQASM 2.0 emitted by :func:`export_qasm`."""
    seq = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("//") or line.startswith("OPENQASM") or line.startswith("include"):
            continue
        if line.startswith("qreg"):
            seq = GateSequence(int(re.search(r"\[(\d+)\]", line).group(1)))
            continue
        m = _STMT.match(line)
        if m is None or seq is None:
            raise ValueError(f"cannot parse QASM line {line!r}")
        name, arg, qargs = m.groups()
        qubits = tuple(int(x) for x in _QARG.findall(qargs))
        param = float(arg) if arg else None
        if name in ("u1", "cu1"):
            seq.append(Gate("mcp", qubits, param))
        else:
            seq.append(Gate(name, qubits, param))
    if seq is None:
        raise ValueError("missing qreg declaration")
    return seq
