"""Entanglement dynamics in a pair of independent atom-cavity systems.

Two two-level atoms, each coupled to its own single cavity mode under the
rotating-wave approximation, exchange entanglement with an initially
entangled photon pair.  The package provides

* exact unitary evolution via a cached spectral decomposition
  (:mod:`doublejc.dynamics`),
* entanglement measures: Wootters concurrence (general and X-state fast
  path) and negativity in two conventions (:mod:`doublejc.measures`),
* every relevant closed form of the resonant dynamics, used to
  cross-validate the numeric pipeline and vice versa
  (:mod:`doublejc.analytic`),
* repeated-projective-measurement (Zeno) evolution that steers the
  atom-to-remote-photon entanglement beyond its free-dynamics ceiling,
* a CLI for grid sweeps, closed-form comparison reports, figure presets
  and a propagator micro-benchmark (:mod:`doublejc.cli`).
"""

from .analytic import (
    excited_amplitudes,
    excited_concurrence_AB,
    excited_negativity_Aa,
    excited_negativity_Ab,
    excited_state_vector,
    ground_amplitudes,
    ground_concurrences,
    ground_state_vector,
    zeno_excited_limit_Ab,
    zeno_ground_limit_Ab,
    zeno_ground_state,
)
from .dynamics import Propagator, ZenoResult, ZeroNormError, reduced_density, zeno_evolve
from .linalg import (
    BadSubsystemError,
    DensityMatrix,
    HilbertLayout,
    LayoutMismatchError,
    NotHermitianError,
    NotPSDError,
    StateVector,
    hermitian_eig,
    is_hermitian,
    is_psd,
    is_unitary,
    kron,
    partial_trace,
    partial_transpose,
    psd_sqrt,
    truncate_subsystem,
)
from .measures import (
    NotDensityMatrixError,
    NotXFormError,
    concurrence_general,
    concurrence_x,
    is_x_form,
    negativity,
)
from .model import (
    InitialCondition,
    ModelParams,
    TruncationTooSmallError,
    build_hamiltonian,
    build_initial_state,
    build_layout,
    excitation_operator,
    zeno_projector,
)

__version__ = "0.1.0"
