"""Exact unitary evolution and measurement-interrupted (Zeno) evolution.

The propagator exp(-iHt) is realized through one cached Hermitian
eigendecomposition; each evolution afterwards costs two dense matrix-vector
products, which is what makes dense (alpha, t, N) sweeps cheap.  Repeated
projective measurement is the literal operator product (P U(t/N))^N applied
to the state, with the success probability of the whole measurement record
tracked alongside the normalized conditional state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    BadSubsystemError,
    DensityMatrix,
    HilbertLayout,
    LayoutMismatchError,
    StateVector,
    hermitian_eig,
    is_psd,
    is_unitary,
)
from .model import ModelParams, build_hamiltonian, build_layout

__all__ = ["ZeroNormError", "Propagator", "ZenoResult", "reduced_density", "zeno_evolve"]

_PROJECTOR_TOL = 1e-10


class ZeroNormError(ValueError):
    """Projection annihilated the state; no conditional state exists."""


class Propagator:
    """Spectral-decomposition propagator for a fixed Hermitian Hamiltonian.

    U(t) = V exp(-i w t) V^dag, cached once per Hamiltonian.  U(0) is the
    identity, U(t) is unitary for all t, and U(t1) U(t2) = U(t1 + t2).
    """

    def __init__(self, hamiltonian: np.ndarray, layout: HilbertLayout, params: ModelParams | None = None):
        if hamiltonian.shape[0] != layout.dim:
            raise LayoutMismatchError(
                f"Hamiltonian dimension {hamiltonian.shape[0]} does not match layout {layout.dims}"
            )
        self.layout = layout
        self.params = params
        self.eigenvalues, self.eigenvectors = hermitian_eig(hamiltonian)

    @classmethod
    def for_params(cls, params: ModelParams) -> "Propagator":
        layout = build_layout(params.n_max)
        return cls(build_hamiltonian(params, layout), layout, params)

    def unitary(self, t: float) -> np.ndarray:
        v = self.eigenvectors
        u = (v * np.exp(-1j * self.eigenvalues * t)) @ v.conj().T
        assert is_unitary(u, 1e-10)
        return u

    def evolve(self, psi: StateVector, t: float) -> StateVector:
        """Evolve a unit-norm state for time t."""
        if psi.layout != self.layout:
            raise LayoutMismatchError("state layout does not match propagator layout")
        v = self.eigenvectors
        coeff = v.conj().T @ psi.amps
        amps = v @ (np.exp(-1j * self.eigenvalues * t) * coeff)
        return StateVector(amps, self.layout)

    def evolve_grid(self, psi: StateVector, ts) -> np.ndarray:
        """Evolve one state to every time in ``ts``; rows are states.

        One matrix product for the whole grid; row k equals
        ``evolve(psi, ts[k]).amps``.  This is the data-parallel path used by
        sweeps, deterministic by construction.
        """
        if psi.layout != self.layout:
            raise LayoutMismatchError("state layout does not match propagator layout")
        ts = np.asarray(ts, dtype=float)
        v = self.eigenvectors
        coeff = v.conj().T @ psi.amps
        phases = np.exp(-1j * np.outer(ts, self.eigenvalues))
        return (phases * coeff) @ v.T


@dataclass(frozen=True)
class ZenoResult:
    """Outcome of projection-interrupted evolution.

    ``state`` is the normalized conditional state given that every
    measurement succeeded; ``raw_norm`` is the norm of the unnormalized
    operator product applied to the initial state, and
    ``success_probability = raw_norm**2`` is the probability of that full
    measurement record.
    """

    state: StateVector
    success_probability: float
    raw_norm: float


def reduced_density(psi: StateVector, keep) -> DensityMatrix:
    """Reduced density matrix of |psi><psi| on the kept subsystems."""
    if abs(psi.norm - 1.0) > 1e-8:
        raise ValueError(f"state must be normalized, norm = {psi.norm!r}")
    keep = psi.layout.axes(keep)
    if len(keep) == 0:
        raise BadSubsystemError("keep must name at least one subsystem")
    if len(set(keep)) != len(keep) or list(keep) != sorted(keep):
        raise BadSubsystemError(f"keep {keep} must list distinct subsystems in original order")
    n = psi.layout.n_subsystems
    if len(keep) == n:
        return DensityMatrix(psi.projector(), psi.layout)
    # direct contraction of the pure state, cheaper than forming |psi><psi|
    drop = [k for k in range(n) if k not in keep]
    t = np.transpose(psi.amps.reshape(psi.layout.dims), list(keep) + drop)
    d_keep = int(np.prod([psi.layout.dims[k] for k in keep]))
    m = t.reshape(d_keep, -1)
    reduced = m @ m.conj().T
    assert is_psd(reduced, 1e-10)
    return DensityMatrix(reduced, psi.layout.restrict(keep))


def zeno_evolve(
    prop: Propagator,
    projector: np.ndarray,
    psi0: StateVector,
    t: float,
    n_steps: int,
) -> ZenoResult:
    """Apply n_steps rounds of [evolve by t/n_steps, then project].

    With the identity projector and any ``n_steps`` this reproduces plain
    ``evolve(psi0, t)`` with success probability 1.
    """
    if n_steps < 1:
        raise ValueError("n_steps must be at least 1")
    if psi0.layout != prop.layout:
        raise LayoutMismatchError("state layout does not match propagator layout")
    p = np.asarray(projector, dtype=complex)
    if p.shape != (prop.layout.dim, prop.layout.dim):
        raise LayoutMismatchError("projector dimension does not match layout")
    if np.abs(p - p.conj().T).max() > _PROJECTOR_TOL or np.abs(p @ p - p).max() > _PROJECTOR_TOL:
        raise ValueError("projector must be Hermitian and idempotent")

    step = p @ prop.unitary(t / n_steps)
    amps = psi0.amps
    for _ in range(n_steps):
        amps = step @ amps
    raw_norm = float(np.linalg.norm(amps))
    if raw_norm < 1e-14:
        raise ZeroNormError("projection annihilated the state")
    return ZenoResult(
        state=StateVector(amps / raw_norm, prop.layout),
        success_probability=raw_norm**2,
        raw_norm=raw_norm,
    )
