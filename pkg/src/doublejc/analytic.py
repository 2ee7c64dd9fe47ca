"""Closed-form expressions for the resonant dynamics.

Every formula here is directly evaluable (numpy-vectorized over time and
angle) and serves as the comparison target for the numeric pipeline
(evolve -> reduce -> measure); conversely the numeric pipeline is the
brute-force oracle for this algebra.  All concurrence/negativity forms
assume zero detuning (omega = nu); the Zeno limit for the excited scenario
additionally assumes omega = nu = g.

Where a transcribed expression disagrees with the numeric pipeline beyond
tolerance, the numeric side is authoritative: it makes no algebraic
simplifications.  Such disagreements are quantified by the comparison
report in :mod:`doublejc.cli` rather than silently absorbed.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .linalg import HilbertLayout, StateVector
from .model import ATOM_DOWN, ATOM_UP, build_layout

__all__ = [
    "GroundAmplitudes",
    "ExcitedAmplitudes",
    "GroundConcurrences",
    "ground_amplitudes",
    "excited_amplitudes",
    "ground_state_vector",
    "excited_state_vector",
    "ground_concurrences",
    "excited_concurrence_gap",
    "excited_concurrence_AB",
    "excited_negativity_Aa",
    "excited_pt_min_eig_Ab",
    "excited_negativity_Ab",
    "zeno_ground_state",
    "zeno_ground_limit_Ab",
    "zeno_excited_f_min",
    "zeno_excited_limit_Ab",
    "zero_intervals",
]


class GroundAmplitudes(NamedTuple):
    """Amplitudes of the ground-scenario state on its four basis kets.

    x1 |dd01>, x2 |dd10>, x3 |du00>, x4 |ud00>; |x1|^2+...+|x4|^2 = 1.
    """

    x1: complex
    x2: complex
    x3: complex
    x4: complex


class ExcitedAmplitudes(NamedTuple):
    """Amplitudes of the excited-scenario state on its eight basis kets.

    y1 |uu01>, y2 |uu10>, y3 |du11>, y4 |ud02>, y5 |dd12>, y6 |du20>,
    y7 |ud11>, y8 |dd21>; sum |y_i|^2 = 1.  Each carries the common
    dynamical phase exp(-2 i nu t).
    """

    y1: complex
    y2: complex
    y3: complex
    y4: complex
    y5: complex
    y6: complex
    y7: complex
    y8: complex


class GroundConcurrences(NamedTuple):
    """The four pairwise concurrences of the ground scenario."""

    AB: float
    ab: float
    Aa: float
    Ab: float


def ground_amplitudes(alpha, g, t) -> GroundAmplitudes:
    """Resonant single-excitation Rabi amplitudes, one per atom-mode pair."""
    gt = np.multiply(g, t)
    return GroundAmplitudes(
        x1=np.cos(gt) * np.cos(alpha) + 0j,
        x2=np.cos(gt) * np.sin(alpha) + 0j,
        x3=-1j * np.sin(gt) * np.cos(alpha),
        x4=-1j * np.sin(gt) * np.sin(alpha),
    )


def excited_amplitudes(alpha, g, t, nu=1.0) -> ExcitedAmplitudes:
    """Amplitudes mixing the one- and two-photon Rabi frequencies g, sqrt(2)g."""
    gt = np.multiply(g, t)
    r2 = np.sqrt(2.0)
    phase = np.exp(-2j * np.multiply(nu, t))
    ca, sa = np.cos(alpha), np.sin(alpha)
    c1, s1 = np.cos(gt), np.sin(gt)
    c2, s2 = np.cos(r2 * gt), np.sin(r2 * gt)
    return ExcitedAmplitudes(
        y1=c1 * c2 * ca * phase,
        y2=c1 * c2 * sa * phase,
        y3=-1j * s1 * c2 * ca * phase,
        y4=-1j * c1 * s2 * ca * phase,
        y5=-s1 * s2 * ca * phase,
        y6=-1j * c1 * s2 * sa * phase,
        y7=-1j * s1 * c2 * sa * phase,
        y8=-s1 * s2 * sa * phase,
    )


_GROUND_KETS = ((ATOM_DOWN, ATOM_DOWN, 0, 1), (ATOM_DOWN, ATOM_DOWN, 1, 0),
                (ATOM_DOWN, ATOM_UP, 0, 0), (ATOM_UP, ATOM_DOWN, 0, 0))

_EXCITED_KETS = ((ATOM_UP, ATOM_UP, 0, 1), (ATOM_UP, ATOM_UP, 1, 0),
                 (ATOM_DOWN, ATOM_UP, 1, 1), (ATOM_UP, ATOM_DOWN, 0, 2),
                 (ATOM_DOWN, ATOM_DOWN, 1, 2), (ATOM_DOWN, ATOM_UP, 2, 0),
                 (ATOM_UP, ATOM_DOWN, 1, 1), (ATOM_DOWN, ATOM_DOWN, 2, 1))


def ground_state_vector(alpha, g, t, layout: HilbertLayout | None = None) -> StateVector:
    """Assemble the full closed-form ground-scenario state at time t."""
    layout = layout or build_layout(2)
    amps = np.zeros(layout.dim, dtype=complex)
    for ket, x in zip(_GROUND_KETS, ground_amplitudes(alpha, g, t)):
        amps[layout.ravel(ket)] = x
    return StateVector(amps, layout)


def excited_state_vector(alpha, g, t, nu=1.0, layout: HilbertLayout | None = None) -> StateVector:
    """Assemble the full closed-form excited-scenario state at time t."""
    layout = layout or build_layout(2)
    amps = np.zeros(layout.dim, dtype=complex)
    for ket, y in zip(_EXCITED_KETS, excited_amplitudes(alpha, g, t, nu)):
        amps[layout.ravel(ket)] = y
    return StateVector(amps, layout)


def ground_concurrences(alpha, g, t) -> GroundConcurrences:
    """Closed-form pairwise concurrences of the ground scenario.

    AB and ab trade entanglement back and forth: AB + ab = |sin(2 alpha)|
    identically, so nothing is ever lost, only stored.  The cross pair Ab
    never exceeds |sin(2 alpha)|/2 under free evolution.
    """
    gt = np.multiply(g, t)
    s2a = np.abs(np.sin(2.0 * np.asarray(alpha, dtype=float)))
    return GroundConcurrences(
        AB=np.sin(gt) ** 2 * s2a,
        ab=np.cos(gt) ** 2 * s2a,
        Aa=np.sin(alpha) ** 2 * np.abs(np.sin(2.0 * gt)),
        Ab=np.abs(np.sin(2.0 * np.asarray(alpha, dtype=float)) * np.sin(2.0 * gt)) / 2.0,
    )


def excited_concurrence_gap(alpha, g, t):
    """The signed gap f(t) whose positive part is the excited-scenario AB concurrence.

    f = (1/2) sin^2(gt) cos^2(sqrt2 gt) |sin 2a| - (1/4)|sin 2gt sin 2sqrt2 gt|.
    Negative stretches of f are exactly the sudden-death windows.
    """
    gt = np.multiply(g, t)
    r2 = np.sqrt(2.0)
    first = 0.5 * np.sin(gt) ** 2 * np.cos(r2 * gt) ** 2 * np.abs(np.sin(2.0 * np.asarray(alpha, dtype=float)))
    second = 0.25 * np.abs(np.sin(2.0 * gt) * np.sin(2.0 * r2 * gt))
    return first - second


def excited_concurrence_AB(alpha, g, t):
    """Excited-scenario atom-atom concurrence, 2 max{0, f(t)}."""
    return 2.0 * np.maximum(0.0, excited_concurrence_gap(alpha, g, t))


def excited_negativity_Aa(alpha, g, t):
    """Closed form for the atom-A / mode-a negativity in the excited scenario.

    Transcribed as printed: a sum of two deficit brackets
    sqrt(pop^2 + 4|coh|^2) - pop, one per coherence block of the partial
    transpose.  Each bracket is nonnegative on its own, and the sum equals
    the sum-convention negativity of the reduced state.
    """
    gt = np.multiply(g, t)
    r2 = np.sqrt(2.0)
    ca2, sa2 = np.cos(alpha) ** 2, np.sin(alpha) ** 2
    first = (
        np.sqrt(4.0 * np.sin(gt) ** 2 * np.cos(gt) ** 2 * ca2**2 + np.cos(r2 * gt) ** 4 * sa2**2)
        - np.cos(r2 * gt) ** 2 * sa2
    )
    second = (
        np.sqrt(4.0 * np.sin(r2 * gt) ** 2 * np.cos(r2 * gt) ** 2 * sa2**2 + np.sin(gt) ** 4 * ca2**2)
        - ca2 * np.sin(gt) ** 2
    )
    return first + second


def excited_pt_min_eig_Ab(alpha, g, t):
    """Transcribed eigenvalue expression behind the excited-scenario Ab negativity.

    This is the lower eigenvalue of one 2x2 coherence block of the partial
    transpose; the numeric pipeline diagonalizes the full partial transpose
    and need not agree wherever another block dips lower.
    """
    gt = np.multiply(g, t)
    r2 = np.sqrt(2.0)
    ca2, sa2 = np.cos(alpha) ** 2, np.sin(alpha) ** 2
    c1, s1 = np.cos(gt) ** 2, np.sin(gt) ** 2
    c2, s2 = np.cos(r2 * gt) ** 2, np.sin(r2 * gt) ** 2
    inner = (
        c2**2 * ca2**2 * s1**2
        + c1**2 * ca2**2 * s2**2
        + s1**2 * s2**2 * sa2**2
        + 6.0 * s1**2 * s2 * c2 * sa2 * ca2
        - 2.0 * ca2**2 * s1 * c1 * s2 * c2
        - 2.0 * s2**2 * s1 * c1 * sa2 * ca2
    )
    return 0.5 * (c2 * ca2 * s1 + c1 * ca2 * s2 + s1 * s2 * sa2 - np.sqrt(np.maximum(inner, 0.0)))


def excited_negativity_Ab(alpha, g, t):
    """Excited-scenario atom-A / mode-b negativity, 2 max{0, -lambda_min}."""
    return 2.0 * np.maximum(0.0, -excited_pt_min_eig_Ab(alpha, g, t))


def zeno_ground_state(alpha, g, t, n_steps: int, layout: HilbertLayout | None = None) -> StateVector:
    """Unnormalized ground-scenario state after n_steps projective measurements on B.

    cos(a) cos^N(gt/N) |dd01> + sin(a) cos(gt) |dd10> - i sin(a) sin(gt) |ud00>.

    Only the branch with B's own cavity excited is repeatedly interrupted;
    the other atom-mode pair evolves freely.  The squared norm,
    cos^2(a) cos^{2N}(gt/N) + sin^2(a), is the success probability of the
    whole measurement record and tends to 1 as N grows.
    """
    if n_steps < 1:
        raise ValueError("n_steps must be at least 1")
    layout = layout or build_layout(2)
    gt = float(np.multiply(g, t))
    amps = np.zeros(layout.dim, dtype=complex)
    amps[layout.ravel((ATOM_DOWN, ATOM_DOWN, 0, 1))] = np.cos(alpha) * np.cos(gt / n_steps) ** n_steps
    amps[layout.ravel((ATOM_DOWN, ATOM_DOWN, 1, 0))] = np.sin(alpha) * np.cos(gt)
    amps[layout.ravel((ATOM_UP, ATOM_DOWN, 0, 0))] = -1j * np.sin(alpha) * np.sin(gt)
    return StateVector(amps, layout)


def zeno_ground_limit_Ab(alpha, g, t):
    """Infinite-measurement limit of the ground-scenario Ab concurrence.

    |sin(2 alpha) sin(gt)|: twice the free-dynamics ceiling, reaching 1 at
    alpha = pi/4, gt = pi/2.
    """
    gt = np.multiply(g, t)
    return np.abs(np.sin(2.0 * np.asarray(alpha, dtype=float)) * np.sin(gt))


def zeno_excited_f_min(alpha, g, t):
    """Transcribed eigenvalue expression behind the excited-scenario Zeno limit.

    Literal transcription, meaningful only at omega = nu = g.  The numeric
    measurement-interrupted dynamics is the authority where the two
    disagree; see the comparison report.
    """
    gt = np.multiply(g, t)
    ca2, sa2 = np.cos(alpha) ** 2, np.sin(alpha) ** 2
    c32 = np.cos(1.5 * gt) ** 2
    s32 = np.sin(1.5 * gt) ** 2
    inner = (
        ca2**2 * np.cos(gt) ** 4
        + (64.0 / 81.0) * sa2**2 * s32**2
        + 4.0 * sa2 * ca2 * np.sin(gt) ** 2 * (c32 + s32 / 9.0)
        - (16.0 / 9.0) * sa2 * ca2 * np.cos(gt) ** 2 * s32
    )
    return 0.5 * (ca2 * np.cos(gt) ** 2 + (8.0 / 9.0) * sa2 * s32 - np.sqrt(np.maximum(inner, 0.0)))


def zeno_excited_limit_Ab(alpha, g, t):
    """Transcribed infinite-measurement limit of the excited-scenario Ab negativity."""
    return 2.0 * np.maximum(0.0, -zeno_excited_f_min(alpha, g, t))


def zero_intervals(ts, values, tol: float = 1e-12):
    """Maximal runs of consecutive samples with value <= tol.

    Returns a list of (start_index, end_index) pairs, both inclusive.
    Useful for locating sudden-death windows in a sampled entanglement
    curve.
    """
    ts = np.asarray(ts)
    values = np.asarray(values)
    if ts.shape != values.shape:
        raise ValueError("ts and values must have equal shape")
    below = values <= tol
    intervals = []
    start = None
    for i, b in enumerate(below):
        if b and start is None:
            start = i
        elif not b and start is not None:
            intervals.append((start, i - 1))
            start = None
    if start is not None:
        intervals.append((start, len(below) - 1))
    return intervals
