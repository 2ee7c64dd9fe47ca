"""Shared fixtures and random-state helpers for the test suite."""

import numpy as np
import pytest

from doublejc import ModelParams, Propagator


@pytest.fixture(scope="session")
def prop():
    """Default resonant propagator (g = omega = nu = 1, n_max = 2)."""
    return Propagator.for_params(ModelParams())


def rng(seed=0):
    return np.random.default_rng(seed)


def random_density(r, dim):
    """Full-rank random density matrix (Ginibre construction)."""
    g = r.normal(size=(dim, dim)) + 1j * r.normal(size=(dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_hermitian(r, dim):
    g = r.normal(size=(dim, dim)) + 1j * r.normal(size=(dim, dim))
    return 0.5 * (g + g.conj().T)


def random_unitary(r, dim):
    g = r.normal(size=(dim, dim)) + 1j * r.normal(size=(dim, dim))
    q, upper = np.linalg.qr(g)
    d = np.diag(upper)
    return q * (d / np.abs(d))


def random_x_state(r):
    """Random PSD unit-trace two-qubit matrix in X form."""
    a, b, c, d = r.dirichlet(np.ones(4))
    z = np.sqrt(b * c) * r.uniform() * np.exp(2j * np.pi * r.uniform())
    w = np.sqrt(a * d) * r.uniform() * np.exp(2j * np.pi * r.uniform())
    rho = np.diag([a, b, c, d]).astype(complex)
    rho[1, 2], rho[2, 1] = z, np.conj(z)
    rho[0, 3], rho[3, 0] = w, np.conj(w)
    return rho


def random_pure(r, dim):
    v = r.normal(size=dim) + 1j * r.normal(size=dim)
    return v / np.linalg.norm(v)


def phase_fixed(amps):
    """Rotate a state so its largest-modulus amplitude is real positive."""
    amps = np.asarray(amps, dtype=complex)
    k = int(np.argmax(np.abs(amps)))
    return amps / (amps[k] / abs(amps[k]))
