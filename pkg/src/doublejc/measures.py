"""Entanglement measures: Wootters concurrence and negativity.

Concurrence comes in two routes that must agree: the general spin-flip
construction, and the closed form for X-shaped states (nonzero entries only
on the main diagonal and anti-diagonal).  The general route avoids the
non-Hermitian product rho * rho_tilde by diagonalizing the isospectral
Hermitian matrix sqrt(rho) rho_tilde sqrt(rho) instead, so a single Hermitian
eigensolver serves the whole package.

Negativity is computed from the spectrum of the partial transpose in two
conventions, normalized so a two-qubit Bell state scores 1 under both:

* ``min``: twice the magnitude of the most negative eigenvalue (zero if
  the partial transpose is positive);
* ``sum``: twice the summed magnitude of all negative eigenvalues.

``sum >= min`` always, with equality when at most one eigenvalue is
negative.
"""

from __future__ import annotations

import numpy as np

from .linalg import (
    BadSubsystemError,
    HilbertLayout,
    hermitian_eig,
    kron,
    partial_transpose,
)
from .model import SIGMA_Y

__all__ = [
    "NotDensityMatrixError",
    "NotXFormError",
    "NEGATIVITY_CONVENTIONS",
    "validate_density",
    "is_x_form",
    "concurrence_general",
    "concurrence_x",
    "negativity",
]

TRACE_TOL = 1e-8
EIG_TOL = 1e-8
X_TOL = 1e-10

NEGATIVITY_CONVENTIONS = ("min", "sum")

_SIGMA_YY = kron(SIGMA_Y, SIGMA_Y)


class NotDensityMatrixError(ValueError):
    """Input fails the density-matrix checks (trace, Hermiticity, spectrum)."""


class NotXFormError(ValueError):
    """Input has weight outside the main diagonal and anti-diagonal."""


def validate_density(rho: np.ndarray, dim: int | None = None) -> np.ndarray:
    """Check Hermiticity, unit trace and near-positivity; return as complex.

    Tolerances are loose enough (1e-8) to accept partial traces of
    numerically evolved pure states.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise NotDensityMatrixError(f"expected a square matrix, got shape {rho.shape}")
    if dim is not None and rho.shape[0] != dim:
        raise NotDensityMatrixError(f"expected dimension {dim}, got {rho.shape[0]}")
    if np.abs(rho - rho.conj().T).max() > TRACE_TOL:
        raise NotDensityMatrixError("matrix is not Hermitian")
    tr = np.trace(rho)
    if abs(tr - 1.0) > TRACE_TOL:
        raise NotDensityMatrixError(f"trace {tr!r} is not 1")
    w = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))
    if w.min() < -EIG_TOL:
        raise NotDensityMatrixError(f"negative eigenvalue {w.min():.3e}")
    return rho


def is_x_form(rho: np.ndarray, tol: float = X_TOL) -> bool:
    """True when all weight sits on the main diagonal and anti-diagonal."""
    rho = np.asarray(rho)
    n = rho.shape[0]
    mask = np.eye(n, dtype=bool) | np.fliplr(np.eye(n, dtype=bool))
    return bool(np.abs(rho[~mask]).max() <= tol) if n > 1 else True


def concurrence_general(rho: np.ndarray) -> float:
    """Wootters concurrence of an arbitrary two-qubit density matrix.

    C = max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)} with l_i the
    decreasing eigenvalues of rho (sy x sy) rho^* (sy x sy).  The sqrt(l_i)
    are obtained as the singular values of T = Psi^T (sy x sy) Psi, where
    rho = Psi Psi^dagger comes from one Hermitian eigendecomposition:
    T^dagger T is isospectral to the Hermitian sqrt(rho) rho_tilde
    sqrt(rho), but the singular values carry full precision even when rho
    is rank deficient, where a clip-and-sqrt of near-zero eigenvalues
    would only be accurate to the square root of machine epsilon.
    """
    rho = validate_density(rho, dim=4)
    w, v = hermitian_eig(0.5 * (rho + rho.conj().T), tol=TRACE_TOL)
    # rank cut: eigenvalues at roundoff level are exact zeros of the true
    # state; keeping them would reintroduce sqrt(eps)-sized ghosts
    w = np.where(w > 16.0 * np.finfo(float).eps * w.max(), w, 0.0)
    factor = v * np.sqrt(w)
    t = factor.T @ _SIGMA_YY @ factor
    sv = np.linalg.svd(t, compute_uv=False)  # descending
    return float(max(0.0, 2.0 * sv[0] - sv.sum()))


def concurrence_x(rho: np.ndarray, tol: float = X_TOL) -> float:
    """Closed-form concurrence for a two-qubit X-shaped density matrix.

    With diagonal (a, b, c, d) and anti-diagonal coherences w (outer, between
    levels 0 and 3) and z (inner, between levels 1 and 2):
    C = 2 max{0, |z| - sqrt(a d), |w| - sqrt(b c)}.
    """
    rho = validate_density(rho, dim=4)
    if not is_x_form(rho, tol):
        raise NotXFormError("matrix has entries off the diagonal and anti-diagonal")
    a, b, c, d = (rho[i, i].real for i in range(4))
    z = rho[1, 2]
    w = rho[0, 3]
    return float(
        2.0 * max(0.0, abs(z) - np.sqrt(max(a * d, 0.0)), abs(w) - np.sqrt(max(b * c, 0.0)))
    )


def negativity(
    rho: np.ndarray,
    layout: HilbertLayout,
    part: int | str = 0,
    convention: str = "min",
) -> float:
    """Negativity of a bipartite state from its partial transpose.

    ``layout`` must describe exactly two subsystems; ``part`` names the one
    to transpose (the spectrum does not depend on the choice).  See the
    module docstring for the two conventions.
    """
    if layout.n_subsystems != 2:
        raise BadSubsystemError(
            f"negativity needs a two-subsystem layout, got {layout.labels}"
        )
    if convention not in NEGATIVITY_CONVENTIONS:
        raise ValueError(f"convention must be one of {NEGATIVITY_CONVENTIONS}")
    rho = validate_density(rho, dim=layout.dim)
    w = np.linalg.eigvalsh(partial_transpose(rho, layout, part))
    if convention == "min":
        return float(2.0 * max(0.0, -w.min()))
    return float(2.0 * np.abs(w[w < 0.0]).sum())
