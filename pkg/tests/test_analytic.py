import numpy as np
import pytest
from conftest import phase_fixed, rng

from doublejc import (
    InitialCondition,
    ModelParams,
    Propagator,
    build_initial_state,
    concurrence_x,
    negativity,
    reduced_density,
    zeno_projector,
)
from doublejc import analytic
from doublejc.analytic import zero_intervals


# ----------------------------------------------------------- amplitudes

def test_ground_amplitudes_normalized():
    for alpha in (0.0, 0.3, np.pi / 4, 2.0):
        for t in np.linspace(0.0, 6.0, 25):
            x = analytic.ground_amplitudes(alpha, 1.0, t)
            assert abs(sum(abs(v) ** 2 for v in x) - 1.0) <= 1e-14


def test_excited_amplitudes_normalized():
    r = rng(21)
    for _ in range(50):
        alpha, g, nu, t = r.uniform(0, np.pi), r.uniform(0.2, 2), r.uniform(0, 2), r.uniform(0, 9)
        y = analytic.excited_amplitudes(alpha, g, t, nu)
        assert abs(sum(abs(v) ** 2 for v in y) - 1.0) <= 1e-12


def test_ground_amplitudes_match_evolution(prop):
    # moduli agree with the numeric propagator on a 50 x 5 (t, alpha) grid
    layout = prop.layout
    for alpha in np.linspace(0.0, np.pi / 2, 5):
        psi0 = build_initial_state(InitialCondition("ground", alpha), layout)
        for t in np.linspace(0.0, np.pi, 50):
            amps = prop.evolve(psi0, t).amps
            expected = analytic.ground_state_vector(alpha, 1.0, t, layout).amps
            assert np.abs(np.abs(amps) - np.abs(expected)).max() <= 1e-10
            assert np.abs(phase_fixed(amps) - phase_fixed(expected)).max() <= 1e-9


@pytest.mark.parametrize("g,freq", [(1.0, 1.0), (1.3, 0.8)])
def test_excited_amplitudes_match_evolution(g, freq):
    # any resonant parameter point: moduli to 1e-10, relative phases to 1e-9
    params = ModelParams(g=g, omega=freq, nu=freq)
    prop = Propagator.for_params(params)
    layout = prop.layout
    for alpha in np.linspace(0.0, np.pi / 2, 5):
        psi0 = build_initial_state(InitialCondition("excited", alpha), layout)
        for t in np.linspace(0.0, np.pi, 50):
            amps = prop.evolve(psi0, t).amps
            expected = analytic.excited_state_vector(alpha, g, t, freq, layout).amps
            assert np.abs(np.abs(amps) - np.abs(expected)).max() <= 1e-10
            assert np.abs(phase_fixed(amps) - phase_fixed(expected)).max() <= 1e-9


# ----------------------------------------------------------- closed forms

def test_ground_concurrences_special_points():
    c = analytic.ground_concurrences(0.0, 1.0, 1.7)
    assert c.AB == 0.0 and c.ab == 0.0 and c.Aa == 0.0 and c.Ab == 0.0
    c = analytic.ground_concurrences(np.pi / 4, 1.0, np.pi / 2)
    assert abs(c.AB - 1.0) <= 1e-15
    assert abs(c.ab) <= 1e-15 and abs(c.Aa) <= 1e-15 and abs(c.Ab) <= 1e-15


def test_entanglement_conservation_identity():
    # AB + ab concurrences sum to |sin 2 alpha| identically
    alphas = np.linspace(0.0, np.pi, 100)
    ts = np.linspace(0.0, np.pi, 100)
    worst = 0.0
    for alpha in alphas:
        c = analytic.ground_concurrences(alpha, 1.0, ts)
        worst = max(worst, np.abs(c.AB + c.ab - abs(np.sin(2 * alpha))).max())
    assert worst <= 1e-12


def test_ground_cross_pair_ceiling():
    # max over t of the Ab concurrence is |sin 2 alpha| / 2, at gt = pi/4
    for alpha in (0.3, np.pi / 4, 1.2):
        ts = np.linspace(0.0, np.pi, 4001)
        vals = analytic.ground_concurrences(alpha, 1.0, ts).Ab
        assert vals.max() <= abs(np.sin(2 * alpha)) / 2 + 1e-12
        at_quarter = analytic.ground_concurrences(alpha, 1.0, np.pi / 4).Ab
        assert abs(at_quarter - abs(np.sin(2 * alpha)) / 2) <= 1e-12


def test_excited_concurrence_AB_points(prop):
    assert analytic.excited_concurrence_AB(0.7, 1.0, 0.0) == 0.0
    assert np.all(analytic.excited_concurrence_AB(0.0, 1.0, np.linspace(0, 7, 40)) == 0.0)
    # cross-check one nontrivial point against the numeric pipeline
    alpha, t = np.pi / 4, np.pi / 2
    psi0 = build_initial_state(InitialCondition("excited", alpha), prop.layout)
    rho = reduced_density(prop.evolve(psi0, t), ("A", "B"))
    assert abs(analytic.excited_concurrence_AB(alpha, 1.0, t) - concurrence_x(rho.mat)) <= 1e-12


def test_excited_negativity_Aa_reduces_at_alpha_zero():
    ts = np.linspace(0.0, 7.0, 400)
    vals = analytic.excited_negativity_Aa(0.0, 1.0, ts)
    assert np.abs(vals - np.abs(np.sin(2 * ts))).max() <= 1e-12
    assert analytic.excited_negativity_Aa(0.3, 1.0, 0.0) == 0.0


def test_excited_negativity_Aa_brackets_never_negative():
    # each deficit bracket is sqrt(x^2 + y^2) - x >= 0, so no outer max is
    # needed; checked over a dense grid
    alphas = np.linspace(0.0, np.pi, 60)
    ts = np.linspace(0.0, 2 * np.pi, 60)
    for alpha in alphas:
        assert analytic.excited_negativity_Aa(alpha, 1.0, ts).min() >= -1e-14


def test_excited_negativity_Ab_sudden_death_windows():
    assert analytic.excited_negativity_Ab(0.9, 1.0, 0.0) == 0.0
    ts = np.linspace(0.0, 2 * np.pi, 400)
    vals = analytic.excited_negativity_Ab(np.pi / 4, 1.0, ts)
    interior = [
        (a, b) for a, b in zero_intervals(ts, vals, tol=1e-12) if a > 0 and b < len(ts) - 1
    ]
    assert interior, "expected an interior zero window between nonzero lobes"


def test_esd_window_length_depends_on_alpha():
    # the claim that the zero-entanglement window length is independent of
    # the initial entanglement does not survive: windows shrink as the
    # photons approach maximal entanglement
    ts = np.linspace(0.0, 2 * np.pi, 4001)

    def interior_lengths(alpha):
        vals = analytic.excited_concurrence_AB(alpha, 1.0, ts)
        return [
            ts[b] - ts[a]
            for a, b in zero_intervals(ts, vals, tol=1e-15)
            if a > 0 and b < len(ts) - 1
        ]

    narrow = interior_lengths(np.pi / 4)   # maximally entangled photons
    wide = interior_lengths(np.pi / 8)
    assert len(narrow) == 1 and len(wide) == 1
    assert wide[0] - narrow[0] > 0.05


# ------------------------------------------------------------- zeno forms

def test_zeno_ground_state_single_step_matches_project_evolve(prop):
    # N = 1: the closed form is exactly P U(t) |phi(0)>
    layout = prop.layout
    proj = zeno_projector(layout, excited=False)
    for alpha, t in [(0.5, 1.1), (np.pi / 4, 2.7)]:
        psi0 = build_initial_state(InitialCondition("ground", alpha), layout)
        direct = proj @ prop.evolve(psi0, t).amps
        closed = analytic.zeno_ground_state(alpha, 1.0, t, 1, layout).amps
        assert np.abs(phase_fixed(direct) - phase_fixed(closed)).max() <= 1e-10


def test_zeno_ground_limit_values():
    assert abs(analytic.zeno_ground_limit_Ab(np.pi / 4, 1.0, np.pi / 2) - 1.0) <= 1e-15
    assert np.all(analytic.zeno_ground_limit_Ab(0.0, 1.0, np.linspace(0, 5, 20)) == 0.0)


def test_zeno_ground_state_rejects_bad_step_count():
    with pytest.raises(ValueError):
        analytic.zeno_ground_state(0.3, 1.0, 1.0, 0)


def test_zeno_excited_limit_special_points():
    assert analytic.zeno_excited_limit_Ab(0.9, 1.0, 0.0) == 0.0
    assert np.abs(analytic.zeno_excited_f_min(0.0, 1.0, np.linspace(0, 7, 50))).max() <= 1e-12


def test_zeno_excited_limit_dominates_free_closed_form():
    # wherever the transcribed projected limit is appreciably nonzero it
    # exceeds the free-dynamics closed form
    ts = np.linspace(0.0, np.pi, 400)
    lim = analytic.zeno_excited_limit_Ab(np.pi / 4, 1.0, ts)
    free = analytic.excited_negativity_Ab(np.pi / 4, 1.0, ts)
    mask = lim >= 1e-3
    assert mask.any()
    assert (lim[mask] - free[mask]).min() > 0.0


def test_zero_intervals_utility():
    ts = np.arange(10.0)
    vals = np.array([0, 0, 1, 0, 0, 0, 2, 0, 1, 0], dtype=float)
    assert zero_intervals(ts, vals) == [(0, 1), (3, 5), (7, 7), (9, 9)]
    with pytest.raises(ValueError):
        zero_intervals(ts, vals[:5])
