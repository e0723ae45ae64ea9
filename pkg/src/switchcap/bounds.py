"""Closed-form capacity bounds for the switched bit-flip/phase-flip pair.

All functions take the two flip probabilities (p for the bit flip, q for
the phase flip) and return scalars in bits or qubits per channel use.
Everything is defined on the closed unit square, including the corners;
the only degenerate point is p*q = 1, where the non-heralded branch never
occurs and its per-branch quantities are undefined.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from functools import cache

import numpy as np


def validate_prob(x: float, name: str = "probability") -> float:
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {x!r}")
    return x


def binary_entropy(x: float) -> float:
    """Binary Shannon entropy in bits; 0 at both endpoints."""
    x = validate_prob(x, "entropy argument")
    if x == 0.0 or x == 1.0:
        return 0.0
    return float(-x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x))


def ub_classical(p: float, q: float) -> float:
    """Bottleneck upper bound for either fixed traversal order.

    Equals 1 - max(H2(p), H2(q)): a cascade cannot beat its worst link.
    """
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    return 1.0 - max(binary_entropy(p), binary_entropy(q))


def plus_branch_coherent_info(p: float, q: float) -> float:
    """Coherent information of the non-heralded branch channel (may be negative)."""
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    pq = p * q
    if pq >= 1.0:
        raise ValueError("branch is degenerate at p*q = 1")
    return 1.0 + (binary_entropy(pq) - binary_entropy(p) - binary_entropy(q)) / (1.0 - pq)


def lb_qs(p: float, q: float) -> float:
    """Lower bound on the switched-channel capacity.

    pq + max(0, 1 - pq + H2(pq) - H2(p) - H2(q)): the heralded noiseless
    fraction plus the clamped coherent-information contribution of the
    other branch. Capped at 1: the exact value never exceeds it, but
    addition rounding can overshoot by ~1e-16 on the p=1 / q=1 edges.
    """
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    pq = p * q
    term = 1.0 - pq + binary_entropy(pq) - binary_entropy(p) - binary_entropy(q)
    return min(1.0, pq + max(0.0, term))


def ub_qs(p: float, q: float) -> float:
    """Upper bound 1 - (1-p) H2(q) on the switched-channel capacity.

    Deliberately asymmetric in (p, q); see ub_qs_symmetrized for the
    min over both labelings.
    """
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    return 1.0 - (1.0 - p) * binary_entropy(q)


def ub_qs_symmetrized(p: float, q: float) -> float:
    """min(ub_qs(p, q), ub_qs(q, p)).

    Variant only; excluded from reports and emitted surfaces, which use
    ub_qs verbatim.
    """
    return min(ub_qs(p, q), ub_qs(q, p))


def gain(p: float, q: float) -> float:
    """Conservative capacity advantage lb_qs - ub_classical, in [-1, 1]."""
    return lb_qs(p, q) - ub_classical(p, q)


def uncertainty(p: float, q: float) -> float:
    """Spread ub_qs - lb_qs between the switched-channel bounds."""
    return ub_qs(p, q) - lb_qs(p, q)


def ree_plus_branch(p: float, q: float) -> float:
    """Relative-entropy upper bound 1 - (1-p) H2(q) / (1-pq) for the
    non-heralded branch, before recombining the two branches."""
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    pq = p * q
    if pq >= 1.0:
        raise ValueError("branch is degenerate at p*q = 1")
    return 1.0 - (1.0 - p) * binary_entropy(q) / (1.0 - pq)


def separable_state_diagonal(p: float, q: float) -> np.ndarray:
    """The diagonal separable reference state used in the ub_qs derivation.

    Explicit diagonal ((1-p), p(1-q), p(1-q), (1-p)) / (2(1-pq)) as a 4x4
    matrix; its channel-on-basis-states construction lives in qswitch and
    must agree entrywise.
    """
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    pq = p * q
    if pq >= 1.0:
        raise ValueError("branch is degenerate at p*q = 1")
    a = (1.0 - p) * (1.0 - q) + q * (1.0 - p)
    b = p * (1.0 - q)
    return np.diag([a, b, b, a]).astype(complex) / (2.0 * (1.0 - pq))


def lb_qs_diagonal(p: float) -> float:
    """Piecewise form of lb_qs on the p = q diagonal.

    p**2 beyond the branch-switch threshold p0, otherwise the entropy
    expression 1 + H2(p^2) - 2 H2(p). Agrees with lb_qs(p, p) everywhere.
    """
    p = validate_prob(p, "p")
    if p >= threshold_p0().value:
        return p * p
    return min(1.0, 1.0 + binary_entropy(p * p) - 2.0 * binary_entropy(p))


@dataclass(frozen=True)
class Threshold:
    """A bracketed root of a scalar residual function."""

    name: str
    value: float
    bracket: tuple[float, float]
    residual: float

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "bracket_lo": self.bracket[0],
            "bracket_hi": self.bracket[1],
            "residual": self.residual,
        }


_BISECT_MAX_ITER = 200
_BISECT_RESIDUAL = 1e-10


def _bisect(f, lo: float, hi: float, name: str) -> Threshold:
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return Threshold(name, lo, (lo, hi), 0.0)
    if fhi == 0.0:
        return Threshold(name, hi, (lo, hi), 0.0)
    if flo * fhi > 0.0:
        raise ValueError(f"no sign change for {name} on [{lo}, {hi}]")
    a, b, fa = lo, hi, flo
    mid, fm = 0.5 * (a + b), f(0.5 * (a + b))
    for _ in range(_BISECT_MAX_ITER):
        mid = 0.5 * (a + b)
        fm = f(mid)
        if abs(fm) <= _BISECT_RESIDUAL:
            break
        if fa * fm < 0.0:
            b = mid
        else:
            a, fa = mid, fm
    return Threshold(name, mid, (lo, hi), abs(fm))


@cache
def threshold_p0() -> Threshold:
    """Diagonal probability where lb_qs switches from the entropy branch to p^2."""
    g = lambda p: 1.0 - p * p + binary_entropy(p * p) - 2.0 * binary_entropy(p)
    return _bisect(g, 0.01, 0.5, "p0")


@cache
def threshold_p1() -> Threshold:
    """Diagonal probability beyond which the switch provably beats any fixed order."""
    h = lambda p: p * p - (1.0 - binary_entropy(p))
    return _bisect(h, 0.2, 0.5, "p1")


@dataclass(frozen=True)
class BoundsReport:
    """Every scalar bound at one (p, q) point.

    plus_coherent_info is reported raw (it may be negative) and is None at
    the degenerate point p*q = 1 where that branch never occurs.
    """

    p: float
    q: float
    q_d: float
    q_e: float
    ub_classical: float
    lb_qs: float
    ub_qs: float
    gain: float
    uncertainty: float
    herald_prob: float
    plus_coherent_info: float | None

    def to_dict(self) -> dict:
        return asdict(self)


def bounds_report(p: float, q: float) -> BoundsReport:
    """Aggregate all bound quantities at one parameter point."""
    p, q = validate_prob(p, "p"), validate_prob(q, "q")
    pq = p * q
    h2p, h2q = binary_entropy(p), binary_entropy(q)
    return BoundsReport(
        p=p,
        q=q,
        q_d=1.0 - h2p,
        q_e=1.0 - h2q,
        ub_classical=ub_classical(p, q),
        lb_qs=lb_qs(p, q),
        ub_qs=ub_qs(p, q),
        gain=gain(p, q),
        uncertainty=uncertainty(p, q),
        herald_prob=pq,
        plus_coherent_info=None if pq >= 1.0 else plus_branch_coherent_info(p, q),
    )
