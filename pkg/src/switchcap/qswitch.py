"""The quantum switch: two channels traversed in a superposition of orders.

A control qubit selects which of the two flip channels acts first. With the
control prepared in |+> and measured in the Hadamard basis afterwards, the
switch splits into two heralded branches: a |-> outcome (probability pq)
whose output is exactly recoverable with a Y correction, and a |+> outcome
carrying a reweighted mixture of identity, X and Z noise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bounds import validate_prob
from .channels import (
    I2,
    X,
    Y,
    Z,
    BELL_DENSITY,
    KrausChannel,
    apply,
    choi_matrix,
    identity_channel,
    kron,
)

KET_PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)
KET_MINUS = np.array([1, -1], dtype=complex) / np.sqrt(2)
PROJ_0 = np.diag([1.0, 0.0]).astype(complex)
PROJ_1 = np.diag([0.0, 1.0]).astype(complex)
PROJ_PLUS = np.outer(KET_PLUS, KET_PLUS.conj())
PROJ_MINUS = np.outer(KET_MINUS, KET_MINUS.conj())

for _m in (KET_PLUS, KET_MINUS, PROJ_0, PROJ_1, PROJ_PLUS, PROJ_MINUS):
    _m.setflags(write=False)


class Branch(enum.Enum):
    """Hadamard-basis measurement outcome on the control qubit."""

    MINUS = "minus"
    PLUS = "plus"


class DegenerateBranchError(ValueError):
    """Requested a heralded branch that occurs with probability zero."""


def switch_kraus(p: float, q: float) -> list[np.ndarray]:
    """The four switch Kraus operators on message (x) control.

    Each operator routes one bit-flip Kraus term and one phase-flip Kraus
    term either bit-then-phase (control |0>) or phase-then-bit (control |1>).
    All four index pairs are kept even when their weight vanishes.
    """
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    d_ops = [np.sqrt(1.0 - p) * I2, np.sqrt(p) * X]
    e_ops = [np.sqrt(1.0 - q) * I2, np.sqrt(q) * Z]
    return [
        kron(di @ ej, PROJ_0) + kron(ej @ di, PROJ_1)
        for di in d_ops
        for ej in e_ops
    ]


def switch_output(p: float, q: float, rho: np.ndarray, control: np.ndarray) -> np.ndarray:
    """Full Kraus-sum output state on message (x) control, dim 4."""
    rho = np.asarray(rho, dtype=complex)
    control = np.asarray(control, dtype=complex)
    if rho.shape != (2, 2) or control.shape != (2, 2):
        raise ValueError("message and control must both be single-qubit states")
    joint = kron(rho, control)
    out = np.zeros((4, 4), dtype=complex)
    for w in switch_kraus(p, q):
        out += w @ joint @ w.conj().T
    return out


def switch_output_closed_form(p: float, q: float, rho: np.ndarray) -> np.ndarray:
    """Output for a |+> control, written directly in its two-branch form:

        ((1-p)(1-q) rho + p(1-q) X rho X + (1-p)q Z rho Z) (x) |+><+|
        + pq Y rho Y (x) |-><-|
    """
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    rho = np.asarray(rho, dtype=complex)
    plus_part = (
        (1.0 - p) * (1.0 - q) * rho
        + p * (1.0 - q) * (X @ rho @ X)
        + (1.0 - p) * q * (Z @ rho @ Z)
    )
    minus_part = p * q * (Y @ rho @ Y.conj().T)
    return kron(plus_part, PROJ_PLUS) + kron(minus_part, PROJ_MINUS)


@dataclass(frozen=True)
class HeraldedBranch:
    """Equivalent message-qubit channel conditioned on one control outcome.

    channel is None for an absent branch (probability zero at the
    degenerate corner p*q = 1).
    """

    outcome: Branch
    probability: float
    channel: KrausChannel | None


def heralded_branches(p: float, q: float) -> tuple[HeraldedBranch, HeraldedBranch]:
    """The (minus, plus) pair of heralded channels.

    The minus branch is the post-correction channel: the deterministic Y
    it picks up inside the switch is folded into the receiver's corrective
    Y, leaving the identity. The plus branch carries I/X/Z noise with
    weights ((1-p)(1-q), p(1-q), (1-p)q) / (1-pq); zero-weight operators
    are dropped.
    """
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    pq = p * q
    minus = HeraldedBranch(Branch.MINUS, pq, identity_channel(2))
    if pq >= 1.0:
        return minus, HeraldedBranch(Branch.PLUS, 0.0, None)
    weights = (
        ((1.0 - p) * (1.0 - q), I2),
        (p * (1.0 - q), X),
        ((1.0 - p) * q, Z),
    )
    ops = tuple(
        np.sqrt(w / (1.0 - pq)) * gate for w, gate in weights if w > 0.0
    )
    plus = HeraldedBranch(Branch.PLUS, 1.0 - pq, KrausChannel(ops, 2))
    return minus, plus


def branch_choi(p: float, q: float, outcome: Branch) -> np.ndarray:
    """Choi state of one heralded branch.

    The minus branch is noiseless after correction, so its Choi state is
    the Bell projector exactly. The plus branch is built by sending half a
    Bell pair through the branch channel.
    """
    minus, plus = heralded_branches(p, q)
    if outcome is Branch.MINUS:
        return BELL_DENSITY.copy()
    if plus.channel is None:
        raise DegenerateBranchError("plus branch is absent at p*q = 1")
    return choi_matrix(plus.channel)


def plus_branch_choi_operator_form(p: float, q: float) -> np.ndarray:
    """Plus-branch Choi state transcribed from its operator-sum expression.

    The two conjugating operators are written as their basis-state sums
    (sum_ij |ij><i,j+1| and sum_i |i0><i0| - |i+1,1><i+1,1|, indices
    mod 2); kept separate from branch_choi so the two constructions can
    arbitrate each other.
    """
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    pq = p * q
    if pq >= 1.0:
        raise DegenerateBranchError("plus branch is absent at p*q = 1")
    a = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            a[2 * i + j, 2 * i + (j ^ 1)] = 1.0
    b = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        b[2 * i + 0, 2 * i + 0] += 1.0
        b[2 * (i ^ 1) + 1, 2 * (i ^ 1) + 1] -= 1.0
    rho = BELL_DENSITY
    out = (
        (1.0 - p) * (1.0 - q) * rho
        + p * (1.0 - q) * (a @ rho @ a.conj().T)
        + (1.0 - p) * q * (b @ rho @ b.conj().T)
    )
    return out / (1.0 - pq)


def plus_branch_eigenvalues(p: float, q: float) -> np.ndarray:
    """Spectrum of the plus-branch Choi state, ascending.

    Three closed-form eigenvalues ((1-p)(1-q), p(1-q), q(1-p)) / (1-pq)
    plus a structural zero.
    """
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    pq = p * q
    if pq >= 1.0:
        raise DegenerateBranchError("plus branch is absent at p*q = 1")
    lam = np.array(
        [
            0.0,
            (1.0 - p) * (1.0 - q) / (1.0 - pq),
            p * (1.0 - q) / (1.0 - pq),
            q * (1.0 - p) / (1.0 - pq),
        ]
    )
    return np.sort(lam)


def plus_branch_separable_state(p: float, q: float) -> np.ndarray:
    """Separable reference state built from the plus channel on basis states:

        (1/2) sum_i |i><i| (x) plus_channel(|i><i|)

    Must match bounds.separable_state_diagonal entrywise.
    """
    _, plus = heralded_branches(p, q)
    if plus.channel is None:
        raise DegenerateBranchError("plus branch is absent at p*q = 1")
    out = np.zeros((4, 4), dtype=complex)
    for proj in (PROJ_0, PROJ_1):
        out += 0.5 * kron(proj, apply(plus.channel, proj))
    return out
