"""Kraus-operator channels: bit flip, phase flip, composition, Choi matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import binary_entropy, validate_prob
from .linalg import HERM_TOL, kron


def _const(m) -> np.ndarray:
    a = np.array(m, dtype=complex)
    a.setflags(write=False)
    return a


I2 = _const([[1, 0], [0, 1]])
X = _const([[0, 1], [1, 0]])
Y = _const([[0, -1j], [1j, 0]])
Z = _const([[1, 0], [0, -1]])

# maximally entangled pair (|00> + |11>)/sqrt(2) and its projector
BELL_KET = _const(np.array([1, 0, 0, 1]) / np.sqrt(2))
BELL_DENSITY = _const(np.outer(BELL_KET, BELL_KET.conj()))


@dataclass(frozen=True)
class KrausChannel:
    """An ordered set of Kraus operators acting on a dim-`dim` space."""

    ops: tuple[np.ndarray, ...]
    dim: int

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=complex) for k in self.ops)
        object.__setattr__(self, "ops", ops)
        for k in ops:
            if k.shape != (self.dim, self.dim):
                raise ValueError(f"Kraus operator shape {k.shape} != ({self.dim}, {self.dim})")

    def completeness_defect(self) -> float:
        """Max-entry deviation of sum(K^dag K) from the identity."""
        acc = sum(k.conj().T @ k for k in self.ops)
        return float(np.max(np.abs(acc - np.eye(self.dim))))

    def is_complete(self, tol: float = HERM_TOL) -> bool:
        return self.completeness_defect() <= tol


def identity_channel(dim: int = 2) -> KrausChannel:
    return KrausChannel((np.eye(dim, dtype=complex),), dim)


def _flip(prob: float, gate: np.ndarray) -> KrausChannel:
    # canonical form: real nonnegative weights, phases live in the gate.
    # zero-weight operators are dropped so prob=0 is the identity channel.
    ops = []
    if prob < 1.0:
        ops.append(np.sqrt(1.0 - prob) * I2)
    if prob > 0.0:
        ops.append(np.sqrt(prob) * gate)
    return KrausChannel(tuple(ops), 2)


def bit_flip(p: float) -> KrausChannel:
    """Channel applying the X gate with probability p."""
    return _flip(validate_prob(p, "p"), X)


def phase_flip(q: float) -> KrausChannel:
    """Channel applying the Z gate with probability q."""
    return _flip(validate_prob(q, "q"), Z)


def apply(ch: KrausChannel, rho: np.ndarray) -> np.ndarray:
    """Channel action sum_k K rho K^dag."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (ch.dim, ch.dim):
        raise ValueError(f"state shape {rho.shape} does not match channel dim {ch.dim}")
    out = np.zeros_like(rho)
    for k in ch.ops:
        out += k @ rho @ k.conj().T
    return out


def compose(first: KrausChannel, second: KrausChannel) -> KrausChannel:
    """Serial cascade: `first` is traversed first, then `second`."""
    if first.dim != second.dim:
        raise ValueError(f"channel dims differ: {first.dim} vs {second.dim}")
    ops = tuple(l @ k for k in first.ops for l in second.ops)
    return KrausChannel(ops, first.dim)


def choi_matrix(ch: KrausChannel) -> np.ndarray:
    """Choi state of a qubit channel: act on one half of a Bell pair."""
    if ch.dim != 2:
        raise ValueError("Choi construction implemented for qubit channels only")
    out = np.zeros((4, 4), dtype=complex)
    for k in ch.ops:
        ext = kron(I2, k)
        out += ext @ BELL_DENSITY @ ext.conj().T
    return out


def flip_channel_capacity(prob: float) -> float:
    """Quantum capacity 1 - H2(prob) of a single bit- or phase-flip channel."""
    return 1.0 - binary_entropy(validate_prob(prob))
