"""Construction of the paired atom-cavity model.

Two two-level atoms ``A`` and ``B`` sit in separate cavities and each couples
to its own single field mode (``a`` and ``b``) under the rotating-wave
approximation.  Tensor order is ``A, B, a, b`` with the first subsystem most
significant; within each atom, index 0 is the excited level ``|up>`` and
index 1 the ground level ``|down>``, so a two-qubit reduced matrix prints in
the order ``|uu>, |ud>, |du>, |dd>``.  Photon levels are indexed by photon
number, 0 through ``n_max``.

The interaction conserves the total excitation number (atomic excitations
plus photons), which makes the Fock-space truncation exact: initial states
with at most two excitations never populate photon number 3 or higher.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import HilbertLayout, StateVector, is_hermitian, kron

__all__ = [
    "TruncationTooSmallError",
    "ModelParams",
    "InitialCondition",
    "SCENARIOS",
    "ATOM_UP",
    "ATOM_DOWN",
    "SIGMA_Z",
    "SIGMA_Y",
    "SIGMA_PLUS",
    "SIGMA_MINUS",
    "destroy",
    "number",
    "build_layout",
    "lift",
    "build_hamiltonian",
    "build_initial_state",
    "excitation_operator",
    "zeno_projector",
]


class TruncationTooSmallError(ValueError):
    """Fock truncation too small to hold the two-excitation dynamics."""


# Atom basis: index 0 = excited |up>, index 1 = ground |down>.
ATOM_UP = 0
ATOM_DOWN = 1

SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_PLUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)   # |up><down|
SIGMA_MINUS = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)  # |down><up|
_PROJ_UP = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
_PROJ_DOWN = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)

SCENARIOS = ("ground", "excited")


@dataclass(frozen=True)
class ModelParams:
    """Coupling constant, atomic/field frequencies and Fock truncation.

    Units have hbar = 1; times are naturally reported as the dimensionless
    product g*t.  Defaults put the system at resonance with unit coupling.
    """

    g: float = 1.0
    omega: float = 1.0
    nu: float = 1.0
    n_max: int = 2

    def __post_init__(self):
        if not self.g > 0:
            raise ValueError("coupling g must be positive")
        if self.omega < 0 or self.nu < 0:
            raise ValueError("frequencies must be nonnegative")
        if self.n_max < 2:
            raise TruncationTooSmallError("n_max must be at least 2")


@dataclass(frozen=True)
class InitialCondition:
    """Which product state the atoms start in, and the photon mixing angle.

    ``ground``:  cos(alpha)|dd01> + sin(alpha)|dd10>
    ``excited``: cos(alpha)|uu01> + sin(alpha)|uu10>
    """

    scenario: str
    alpha: float

    def __post_init__(self):
        if self.scenario not in SCENARIOS:
            raise ValueError(f"scenario must be one of {SCENARIOS}, got {self.scenario!r}")


def destroy(dim: int) -> np.ndarray:
    """Truncated annihilation operator: a|n> = sqrt(n)|n-1>."""
    return np.diag(np.sqrt(np.arange(1.0, dim)), 1).astype(complex)


def number(dim: int) -> np.ndarray:
    """Photon number operator, diagonal and exact (no sqrt roundoff)."""
    return np.diag(np.arange(float(dim))).astype(complex)


def build_layout(n_max: int) -> HilbertLayout:
    """Layout [A, B, a, b] with atoms first; photons run 0..n_max."""
    if n_max < 2:
        raise TruncationTooSmallError("n_max must be at least 2")
    d = int(n_max) + 1
    return HilbertLayout((2, 2, d, d), ("A", "B", "a", "b"))


def lift(op: np.ndarray, subsystem, layout: HilbertLayout) -> np.ndarray:
    """Embed a single-subsystem operator into the full space."""
    k = layout.axis(subsystem)
    out = np.ones((1, 1), dtype=complex)
    for i, d in enumerate(layout.dims):
        out = kron(out, op if i == k else np.eye(d, dtype=complex))
    return out


def build_hamiltonian(params: ModelParams, layout: HilbertLayout) -> np.ndarray:
    """Rotating-wave Hamiltonian of the two independent atom-cavity pairs.

    H = (omega/2)(sz_A + sz_B)
        + g (a^dag s-_A + a s+_A) + g (b^dag s-_B + b s+_B)
        + nu (a^dag a + b^dag b)

    Real symmetric in the standard basis; commutes with the excitation
    number operator.
    """
    d = layout.dims[2]
    a = destroy(d)

    sz_a = lift(SIGMA_Z, "A", layout)
    sz_b = lift(SIGMA_Z, "B", layout)
    n_a = lift(number(d), "a", layout)
    n_b = lift(number(d), "b", layout)

    i2 = np.eye(2, dtype=complex)
    i_f = np.eye(d, dtype=complex)
    coup_a = kron(kron(SIGMA_MINUS, i2), kron(a.conj().T, i_f))
    coup_a += kron(kron(SIGMA_PLUS, i2), kron(a, i_f))
    coup_b = kron(kron(i2, SIGMA_MINUS), kron(i_f, a.conj().T))
    coup_b += kron(kron(i2, SIGMA_PLUS), kron(i_f, a))

    h = 0.5 * params.omega * (sz_a + sz_b)
    h += params.g * (coup_a + coup_b)
    h += params.nu * (n_a + n_b)
    assert is_hermitian(h, 0.0)
    return h


def build_initial_state(ic: InitialCondition, layout: HilbertLayout) -> StateVector:
    """Two-amplitude initial product state for the chosen scenario."""
    atom = ATOM_DOWN if ic.scenario == "ground" else ATOM_UP
    amps = np.zeros(layout.dim, dtype=complex)
    amps[layout.ravel((atom, atom, 0, 1))] = np.cos(ic.alpha)
    amps[layout.ravel((atom, atom, 1, 0))] = np.sin(ic.alpha)
    return StateVector(amps, layout)


def excitation_operator(layout: HilbertLayout) -> np.ndarray:
    """Total excitation number: atomic populations plus photon numbers."""
    d = layout.dims[2]
    return (
        lift(_PROJ_UP, "A", layout)
        + lift(_PROJ_UP, "B", layout)
        + lift(number(d), "a", layout)
        + lift(number(d), "b", layout)
    )


def zeno_projector(layout: HilbertLayout, excited: bool = False) -> np.ndarray:
    """Projector pinning atom B to one level, identity elsewhere.

    ``excited=False`` keeps B in its ground level (the B state of the
    ground scenario's initial condition); ``excited=True`` keeps B in its
    excited level (the B state of the excited scenario's initial
    condition).  Idempotent, Hermitian, rank dim/2.
    """
    proj = _PROJ_UP if excited else _PROJ_DOWN
    return lift(proj, "B", layout)
