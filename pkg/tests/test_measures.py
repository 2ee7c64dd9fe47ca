import numpy as np
import pytest
from conftest import (
    random_density,
    random_pure,
    random_unitary,
    random_x_state,
    rng,
)

from doublejc import (
    BadSubsystemError,
    HilbertLayout,
    InitialCondition,
    NotDensityMatrixError,
    NotXFormError,
    build_initial_state,
    concurrence_general,
    concurrence_x,
    is_x_form,
    kron,
    negativity,
    reduced_density,
    truncate_subsystem,
)
from doublejc import analytic

TWO_QUBITS = HilbertLayout((2, 2), ("L", "R"))
QUBIT_QUTRIT = HilbertLayout((2, 3), ("L", "R"))

BELL = np.zeros((4, 4), dtype=complex)
BELL[1, 1] = BELL[2, 2] = BELL[1, 2] = BELL[2, 1] = 0.5  # (|01> + |10>)/sqrt(2)


# ------------------------------------------------------------- concurrence

def test_concurrence_maximally_mixed_is_zero():
    assert concurrence_general(np.eye(4) / 4) == 0.0


def test_concurrence_bell_state_is_one():
    assert abs(concurrence_general(BELL) - 1.0) <= 1e-12
    assert abs(concurrence_x(BELL) - 1.0) <= 1e-12


def test_concurrence_rejects_non_density():
    with pytest.raises(NotDensityMatrixError):
        concurrence_general(np.eye(4))  # trace 4
    bad = np.diag([1.2, -0.2, 0.0, 0.0]).astype(complex)
    with pytest.raises(NotDensityMatrixError):
        concurrence_general(bad)


def test_concurrence_x_diagonal_is_zero():
    assert concurrence_x(np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)) == 0.0


def test_concurrence_x_two_branch_coherence():
    # populations 1/2 on the inner levels with full coherence: C = 2|z| = 1
    rho = np.zeros((4, 4), dtype=complex)
    x3 = -1j / np.sqrt(2)
    x4 = -1j / np.sqrt(2)
    rho[1, 1] = abs(x4) ** 2
    rho[2, 2] = abs(x3) ** 2
    rho[1, 2] = x4 * np.conj(x3)
    rho[2, 1] = np.conj(rho[1, 2])
    assert abs(concurrence_x(rho) - 2 * abs(x3 * np.conj(x4))) <= 1e-12
    assert abs(concurrence_x(rho) - 1.0) <= 1e-12


def test_concurrence_x_rejects_off_x_entries():
    rho = np.eye(4, dtype=complex) / 4
    rho[0, 1] = rho[1, 0] = 0.05
    with pytest.raises(NotXFormError):
        concurrence_x(rho)


def test_x_fast_path_equals_general_on_random_x_states():
    r = rng(11)
    for _ in range(1000):
        rho = random_x_state(r)
        assert abs(concurrence_x(rho) - concurrence_general(rho)) <= 1e-9


def test_concurrence_invariant_under_local_unitaries():
    r = rng(12)
    for _ in range(200):
        rho = random_density(r, 4)
        u = kron(random_unitary(r, 2), random_unitary(r, 2))
        rotated = u @ rho @ u.conj().T
        assert abs(concurrence_general(rho) - concurrence_general(rotated)) <= 1e-9


# -------------------------------------------------------------- negativity

def test_negativity_product_states_are_zero():
    r = rng(13)
    rho = kron(random_density(r, 2), random_density(r, 3))
    assert negativity(rho, QUBIT_QUTRIT, convention="min") == 0.0
    assert negativity(rho, QUBIT_QUTRIT, convention="sum") == 0.0


def test_negativity_bell_is_one_under_both_conventions():
    assert abs(negativity(BELL, TWO_QUBITS, convention="min") - 1.0) <= 1e-12
    assert abs(negativity(BELL, TWO_QUBITS, convention="sum") - 1.0) <= 1e-12


def test_negativity_sum_dominates_min():
    r = rng(14)
    for dims in [(2, 2), (2, 3)]:
        layout = HilbertLayout(dims, ("L", "R"))
        for _ in range(100):
            rho = random_density(r, dims[0] * dims[1])
            n_min = negativity(rho, layout, convention="min")
            n_sum = negativity(rho, layout, convention="sum")
            assert n_sum >= n_min - 1e-12


def test_negativity_equals_concurrence_for_pure_two_qubit_states():
    r = rng(15)
    for _ in range(50):
        psi = random_pure(r, 4)
        rho = np.outer(psi, psi.conj())
        c = concurrence_general(rho)
        assert abs(negativity(rho, TWO_QUBITS, convention="min") - c) <= 1e-9
        assert abs(negativity(rho, TWO_QUBITS, convention="sum") - c) <= 1e-9


def test_negativity_part_choice_is_irrelevant():
    r = rng(16)
    rho = random_density(r, 6)
    for conv in ("min", "sum"):
        left = negativity(rho, QUBIT_QUTRIT, "L", conv)
        right = negativity(rho, QUBIT_QUTRIT, "R", conv)
        assert abs(left - right) <= 1e-12


def test_negativity_rejects_many_subsystem_layouts():
    layout = HilbertLayout((2, 2, 2), ("x", "y", "z"))
    with pytest.raises(BadSubsystemError):
        negativity(np.eye(8) / 8, layout)
    with pytest.raises(ValueError):
        negativity(BELL, TWO_QUBITS, convention="median")


# ------------------------------------------------- pipeline spot checks

def test_ground_atom_concurrence_surface(prop):
    # numeric C_AB reproduces sin^2(gt)|sin 2a| over a 20x20 grid
    layout = prop.layout
    worst = 0.0
    for alpha in np.linspace(0.0, np.pi, 20):
        psi0 = build_initial_state(InitialCondition("ground", alpha), layout)
        grid = prop.evolve_grid(psi0, np.linspace(0.0, np.pi, 20))
        for i, t in enumerate(np.linspace(0.0, np.pi, 20)):
            psi = type(psi0)(grid[i], layout)
            c = concurrence_x(reduced_density(psi, ("A", "B")).mat)
            worst = max(worst, abs(c - np.sin(t) ** 2 * abs(np.sin(2 * alpha))))
    assert worst <= 1e-9


def test_excited_atom_mode_negativity_at_alpha_zero(prop):
    # across the A|a cut the state is a two-branch Schmidt state: both
    # conventions give |sin 2gt|
    layout = prop.layout
    psi0 = build_initial_state(InitialCondition("excited", 0.0), layout)
    for t in np.linspace(0.0, np.pi, 15):
        psi = prop.evolve(psi0, t)
        rho = reduced_density(psi, ("A", "a"))
        expected = abs(np.sin(2 * t))
        assert abs(negativity(rho.mat, rho.layout, convention="min") - expected) <= 1e-9
        assert abs(negativity(rho.mat, rho.layout, convention="sum") - expected) <= 1e-9


@pytest.mark.parametrize("pair", [("A", "B"), ("a", "b"), ("A", "a"), ("A", "b")])
def test_ground_reductions_are_x_form(prop, pair):
    layout = prop.layout
    psi0 = build_initial_state(InitialCondition("ground", 0.9), layout)
    for t in np.linspace(0.0, np.pi, 9):
        rho = reduced_density(prop.evolve(psi0, t), pair)
        mat, sub = rho.mat, rho.layout
        for label, d in zip(sub.labels, sub.dims):
            if d > 2:
                mat, sub = truncate_subsystem(mat, sub, label, 2)
        assert is_x_form(mat)
        assert abs(concurrence_x(mat) - concurrence_general(mat)) <= 1e-9


def test_excited_atom_reduction_is_x_form(prop):
    layout = prop.layout
    psi0 = build_initial_state(InitialCondition("excited", 1.1), layout)
    for t in np.linspace(0.0, 2 * np.pi, 9):
        rho = reduced_density(prop.evolve(psi0, t), ("A", "B"))
        assert is_x_form(rho.mat)
        assert abs(concurrence_x(rho.mat) - concurrence_general(rho.mat)) <= 1e-9
