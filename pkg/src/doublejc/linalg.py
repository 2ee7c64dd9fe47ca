"""Dense complex linear algebra on small multipartite Hilbert spaces.

Everything operates on plain numpy arrays, tagged where needed with a
:class:`HilbertLayout` that records the tensor factorization.  All functions
are pure and treat their inputs as immutable, so values can be shared freely
across threads.  Dimensions here are tiny (<= a few hundred), so plain dense
LAPACK-backed routines are used throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "NotHermitianError",
    "NotPSDError",
    "BadSubsystemError",
    "LayoutMismatchError",
    "HilbertLayout",
    "StateVector",
    "DensityMatrix",
    "is_hermitian",
    "is_unitary",
    "is_psd",
    "kron",
    "hermitian_eig",
    "psd_sqrt",
    "partial_trace",
    "partial_transpose",
    "truncate_subsystem",
]

DEFAULT_TOL = 1e-10


class NotHermitianError(ValueError):
    """Raised when an input expected to be Hermitian is not."""


class NotPSDError(ValueError):
    """Raised when an input expected to be positive semidefinite is not."""


class BadSubsystemError(ValueError):
    """Raised when a subsystem selection does not fit the layout."""


class LayoutMismatchError(ValueError):
    """Raised when an array is paired with a layout of the wrong dimension."""


def _as_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise ValueError("matrix contains NaN or Inf entries")
    return m


def is_hermitian(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m)
    return bool(np.abs(m - m.conj().T).max() <= tol)


def is_unitary(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m)
    eye = np.eye(m.shape[0])
    return bool(np.abs(m.conj().T @ m - eye).max() <= tol)


def is_psd(m: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    if not is_hermitian(m, tol):
        return False
    return bool(np.linalg.eigvalsh(m).min() >= -tol)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, first factor most significant."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def hermitian_eig(m: np.ndarray, tol: float = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(w, v)`` with eigenvalues ``w`` real and ascending and
    eigenvector columns ``v[:, k]`` orthonormal, so that
    ``m = v @ diag(w) @ v.conj().T``.

    Raises
    ------
    NotHermitianError
        If ``m`` deviates from Hermiticity by more than ``tol``.
    """
    m = _as_square(m)
    dev = np.abs(m - m.conj().T).max()
    if dev > tol:
        raise NotHermitianError(f"matrix is not Hermitian (max deviation {dev:.3e})")
    w, v = np.linalg.eigh(m)
    return w, v


def psd_sqrt(rho: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in ``[-tol, 0)`` are clamped to zero; anything below ``-tol``
    raises :class:`NotPSDError`.  The clamp absorbs roundoff-level negative
    eigenvalues that partial traces of numerically evolved pure states carry.
    """
    w, v = hermitian_eig(rho, tol=max(tol, DEFAULT_TOL))
    if w.min() < -tol:
        raise NotPSDError(f"matrix has eigenvalue {w.min():.3e} < -{tol:.1e}")
    w = np.clip(w, 0.0, None)
    s = (v * np.sqrt(w)) @ v.conj().T
    s = 0.5 * (s + s.conj().T)
    assert is_hermitian(s, 0.0) and is_psd(s, 1e-10)
    return s


@dataclass(frozen=True)
class HilbertLayout:
    """Ordered tensor factorization of a Hilbert space.

    The first listed subsystem is the most significant in the composite
    index (mixed-radix, big-endian): composite index ``i`` decomposes as
    ``i = ((l0*d1 + l1)*d2 + l2)*...`` for per-subsystem levels ``l_k``.
    """

    dims: tuple[int, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        labels = tuple(str(s) for s in self.labels)
        if len(dims) != len(labels):
            raise ValueError("dims and labels must have equal length")
        if len(dims) == 0 or any(d < 1 for d in dims):
            raise ValueError("dims must be a nonempty tuple of positive integers")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        """Total dimension (product of subsystem dimensions)."""
        return math.prod(self.dims)

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)

    def axis(self, subsystem: int | str) -> int:
        """Resolve a subsystem given by index or label to its axis index."""
        if isinstance(subsystem, str):
            try:
                return self.labels.index(subsystem)
            except ValueError:
                raise BadSubsystemError(
                    f"no subsystem labeled {subsystem!r} in {self.labels}"
                ) from None
        k = int(subsystem)
        if not 0 <= k < len(self.dims):
            raise BadSubsystemError(f"subsystem index {k} outside layout {self.dims}")
        return k

    def axes(self, subsystems) -> tuple[int, ...]:
        return tuple(self.axis(s) for s in subsystems)

    def ravel(self, levels) -> int:
        """Composite index of a basis state given per-subsystem levels."""
        levels = tuple(int(l) for l in levels)
        if len(levels) != len(self.dims):
            raise ValueError(f"expected {len(self.dims)} levels, got {len(levels)}")
        idx = 0
        for lvl, d in zip(levels, self.dims):
            if not 0 <= lvl < d:
                raise ValueError(f"level {lvl} out of range for dimension {d}")
            idx = idx * d + lvl
        return idx

    def unravel(self, index: int) -> tuple[int, ...]:
        """Per-subsystem levels of a composite basis index."""
        index = int(index)
        if not 0 <= index < self.dim:
            raise ValueError(f"index {index} out of range for dimension {self.dim}")
        levels = []
        for d in reversed(self.dims):
            levels.append(index % d)
            index //= d
        return tuple(reversed(levels))

    def basis_state(self, levels) -> np.ndarray:
        """Unit vector for the basis ket with the given per-subsystem levels."""
        v = np.zeros(self.dim, dtype=complex)
        v[self.ravel(levels)] = 1.0
        return v

    def restrict(self, keep) -> "HilbertLayout":
        """Layout of the subsystems in ``keep``, original order preserved."""
        keep = self.axes(keep)
        return HilbertLayout(
            tuple(self.dims[k] for k in keep),
            tuple(self.labels[k] for k in keep),
        )


@dataclass(frozen=True)
class StateVector:
    """Pure state tagged with its layout.  Not necessarily normalized."""

    amps: np.ndarray
    layout: HilbertLayout

    def __post_init__(self):
        amps = np.asarray(self.amps, dtype=complex)
        if amps.ndim != 1:
            raise ValueError("state amplitudes must be one-dimensional")
        if amps.size != self.layout.dim:
            raise LayoutMismatchError(
                f"state of dimension {amps.size} does not match layout dimension {self.layout.dim}"
            )
        object.__setattr__(self, "amps", amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def normalized(self) -> "StateVector":
        n = self.norm
        if n == 0.0:
            raise ValueError("cannot normalize a zero state")
        return StateVector(self.amps / n, self.layout)

    def projector(self) -> np.ndarray:
        """Outer product |psi><psi| as a dense matrix."""
        return np.outer(self.amps, self.amps.conj())


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian unit-trace PSD matrix tagged with the layout it lives on."""

    mat: np.ndarray
    layout: HilbertLayout

    def __post_init__(self):
        mat = _as_square(self.mat)
        if mat.shape[0] != self.layout.dim:
            raise LayoutMismatchError(
                f"matrix of dimension {mat.shape[0]} does not match layout dimension {self.layout.dim}"
            )
        object.__setattr__(self, "mat", mat)


def _check_square_for_layout(rho: np.ndarray, layout: HilbertLayout) -> np.ndarray:
    rho = _as_square(rho)
    if rho.shape[0] != layout.dim:
        raise LayoutMismatchError(
            f"matrix dimension {rho.shape[0]} does not match layout dimension {layout.dim}"
        )
    return rho


def partial_trace(rho: np.ndarray, layout: HilbertLayout, keep) -> tuple[np.ndarray, HilbertLayout]:
    """Trace out every subsystem not listed in ``keep``.

    ``keep`` is a nonempty selection of subsystem indices or labels in the
    layout's original order.  Returns the reduced matrix together with the
    restricted layout.  Trace and Hermiticity are preserved.
    """
    rho = _check_square_for_layout(rho, layout)
    keep = layout.axes(keep)
    if len(keep) == 0:
        raise BadSubsystemError("keep must name at least one subsystem")
    if len(set(keep)) != len(keep) or list(keep) != sorted(keep):
        raise BadSubsystemError(
            f"keep {keep} must list distinct subsystems in original order"
        )
    n = layout.n_subsystems
    drop = [k for k in range(n) if k not in keep]
    t = rho.reshape(layout.dims + layout.dims)
    row_perm = list(keep) + drop
    perm = row_perm + [n + k for k in row_perm]
    t = np.transpose(t, perm)
    d_keep = math.prod(layout.dims[k] for k in keep)
    d_drop = math.prod(layout.dims[k] for k in drop) if drop else 1
    t = t.reshape(d_keep, d_drop, d_keep, d_drop)
    reduced = np.einsum("ikjk->ij", t)
    return reduced, layout.restrict(keep)


def partial_transpose(rho: np.ndarray, layout: HilbertLayout, subsystem) -> np.ndarray:
    """Transpose of one tensor factor's indices; an exact involution."""
    rho = _check_square_for_layout(rho, layout)
    k = layout.axis(subsystem)
    n = layout.n_subsystems
    t = rho.reshape(layout.dims + layout.dims)
    perm = list(range(2 * n))
    perm[k], perm[n + k] = perm[n + k], perm[k]
    return np.transpose(t, perm).reshape(rho.shape)


def truncate_subsystem(
    rho: np.ndarray,
    layout: HilbertLayout,
    subsystem,
    new_dim: int,
    tol: float = DEFAULT_TOL,
) -> tuple[np.ndarray, HilbertLayout]:
    """Drop a subsystem's levels ``>= new_dim`` from a density matrix.

    Only valid when the dropped levels carry negligible population
    (diagonal weight <= ``tol``); with an exact excitation-number cutoff the
    discarded weight is zero and this is a basis relabeling, not an
    approximation.
    """
    rho = _check_square_for_layout(rho, layout)
    k = layout.axis(subsystem)
    d = layout.dims[k]
    if not 1 <= new_dim <= d:
        raise BadSubsystemError(f"new dimension {new_dim} invalid for subsystem of dimension {d}")
    n = layout.n_subsystems
    t = rho.reshape(layout.dims + layout.dims)
    sl = [slice(None)] * (2 * n)
    sl[k] = slice(0, new_dim)
    sl[n + k] = slice(0, new_dim)
    kept = t[tuple(sl)]
    new_dims = list(layout.dims)
    new_dims[k] = new_dim
    new_total = math.prod(new_dims)
    block = kept.reshape(new_total, new_total)
    dropped = float(np.trace(rho).real - np.trace(block).real)
    if abs(dropped) > tol:
        raise ValueError(
            f"levels >= {new_dim} of subsystem {layout.labels[k]!r} carry population {dropped:.3e}"
        )
    return block, HilbertLayout(tuple(new_dims), layout.labels)
