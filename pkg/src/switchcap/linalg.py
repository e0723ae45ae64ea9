"""Dense complex linear algebra for few-qubit states.

Everything here operates on plain complex ndarrays. Matrices never exceed
8x8 in this package, so double precision leaves ample headroom against the
tolerances below.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

# Tolerance ledger, fixed once for the whole package.
HERM_TOL = 1e-12        # hermiticity / trace deviation
PSD_SLACK = -1e-10      # eigenvalues may dip this far below zero
SUPPORT_TOL = 1e-10     # support membership test for relative entropy


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Tensor product with the left factor most significant (big-endian)."""
    return np.kron(a, b)


def is_hermitian(m: np.ndarray, tol: float = HERM_TOL) -> bool:
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def validate_density_matrix(rho: np.ndarray, *, name: str = "rho") -> np.ndarray:
    """Check hermiticity, unit trace and positivity; return rho unchanged.

    Raises ValueError with the violated property named. Eigenvalues below
    PSD_SLACK count as invalid; small negative rounding noise does not.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"{name} is not a square matrix")
    if not np.all(np.isfinite(rho)):
        raise ValueError(f"{name} contains non-finite entries")
    if not is_hermitian(rho):
        raise ValueError(f"{name} is not Hermitian within {HERM_TOL}")
    tr = np.trace(rho).real
    if abs(tr - 1.0) > HERM_TOL:
        raise ValueError(f"{name} has trace {tr!r}, expected 1")
    w = np.linalg.eigvalsh(rho)
    if w[0] < PSD_SLACK:
        raise ValueError(f"{name} has negative eigenvalue {w[0]!r}")
    return rho


def partial_trace(rho: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out every subsystem not listed in `keep`.

    `dims` lists the subsystem dimensions, leftmost tensor factor first.
    Kept subsystems retain their original relative order.
    """
    rho = np.asarray(rho, dtype=complex)
    dims = list(dims)
    n = len(dims)
    total = math.prod(dims)
    if rho.shape != (total, total):
        raise ValueError(f"dims {dims} do not match matrix of shape {rho.shape}")
    keep = sorted(set(keep))
    if not keep or any(k < 0 or k >= n for k in keep):
        raise ValueError(f"keep={keep} is not a nonempty subset of range({n})")

    letters = "abcdefghijkl"
    rows = [letters[i] for i in range(n)]
    cols = [letters[n + i] if i in keep else letters[i] for i in range(n)]
    out = [letters[i] for i in keep] + [letters[n + i] for i in keep]
    eq = "".join(rows) + "".join(cols) + "->" + "".join(out)
    kept_dim = math.prod(dims[i] for i in keep)
    return np.einsum(eq, rho.reshape(dims + dims)).reshape(kept_dim, kept_dim)


def hermitian_eigenvalues(m: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending."""
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m, tol):
        raise ValueError(f"matrix is not Hermitian within {tol}")
    return np.linalg.eigvalsh(m)


def von_neumann_entropy(rho: np.ndarray) -> float:
    """Entropy -sum(w log2 w) in bits, with 0 log 0 = 0.

    Eigenvalues are clamped to [0, 1] after validation, so rounding noise
    like -1e-16 never yields NaN.
    """
    w = hermitian_eigenvalues(rho)
    if w[0] < -1e-9:
        raise ValueError(f"state has eigenvalue {w[0]!r}, not a density matrix")
    w = np.clip(w, 0.0, 1.0)
    nz = w[w > 0]
    return float(-np.sum(nz * np.log2(nz)))


def relative_entropy(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Relative entropy S(rho || sigma) = -S(rho) - Tr[rho log2 sigma] in bits.

    Returns math.inf when rho has weight outside sigma's support (eigenvalue
    test at SUPPORT_TOL) instead of raising.
    """
    rho = np.asarray(rho, dtype=complex)
    w, v = np.linalg.eigh(np.asarray(sigma, dtype=complex))
    cross = 0.0
    for k in range(len(w)):
        wk = max(float(w[k]), 0.0)
        weight = float((v[:, k].conj() @ rho @ v[:, k]).real)
        if wk <= SUPPORT_TOL:
            if weight > SUPPORT_TOL:
                return math.inf
        elif weight > 0.0:
            cross += weight * math.log2(wk)
    return -von_neumann_entropy(rho) - cross
