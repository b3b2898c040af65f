"""
Test WB Scheme

Speed estimate, time-step control, Thomas solver and the well-balanced
moving-frame step.
"""
import logging

import numpy as np
import pytest
from scipy.linalg import solve_banded

from wbwave.cell import cell_eval, shift_row
from wbwave.errors import NumericalError, PivotError
from wbwave.model import (
    Profile,
    ReactionKind,
    ReactionModel,
    exact_pushed_front,
    make_grid,
    minimal_wave_speed,
    sigmoid_initial,
)
from wbwave.reference import zero_wave_step
from wbwave.scheme import (
    Integrator,
    StepConfig,
    TridiagonalSystem,
    advance,
    assemble_implicit,
    clip_to_horizon,
    flush_subnormals,
    leveque_yee,
    select_timestep,
    shift_back,
    thomas_solve,
    wb_step_explicit,
    wb_step_implicit,
)

FKPP = ReactionModel(ReactionKind.FKPP)


def constant_factor(F):
    return lambda midpoints: np.full_like(midpoints, F)


def exact_stationary_profile(sigma, F, grid, right_state=0.3):
    """Nodes of the solution of -sigma w' - w'' = F w with w(x_min) = 1, w(x_max) = right_state."""
    values = np.array([cell_eval(sigma, F, grid.length, 1.0, right_state, x - grid.x_min) for x in grid.x])
    return Profile(values, left_state=1.0, right_state=right_state)


class TestLevequeYee:
    """Test suite for the speed estimate."""

    def test_stationary(self):
        p = Profile(np.array([1.0, 0.8, 0.3, 0.1, 0.0]))
        assert leveque_yee(p, p.copy(), 0.1, 0.05).sigma_hat == 0.0

    def test_one_cell_shift(self):
        prev = Profile(np.array([1.0, 1.0, 0.0, 0.0, 0.0]))
        curr = Profile(np.array([1.0, 1.0, 1.0, 0.0, 0.0]))
        estimate = leveque_yee(prev, curr, 0.1, 0.05)
        assert estimate.sigma_hat == pytest.approx(2.0, rel=1e-15)
        assert estimate.numerator_mass_change == -1.0
        assert estimate.denominator_jump == -1.0

    def test_exact_pushed_front(self):
        grid = make_grid(0.0, 40.0, 0.05)
        speed = minimal_wave_speed(ReactionModel(ReactionKind.CUBIC, a=3.0))
        dt = 0.01
        prev = Profile(exact_pushed_front(3.0, grid.x - 20.0))
        curr = Profile(exact_pushed_front(3.0, grid.x - 20.0 - speed * dt))
        assert leveque_yee(prev, curr, grid.dx, dt).sigma_hat == pytest.approx(2.0412, abs=2e-3)

    def test_rejects_bad_input(self):
        p = Profile(np.array([1.0, 0.5, 0.0]))
        with pytest.raises(ValueError, match="positive"):
            leveque_yee(p, p, 0.1, 0.0)
        with pytest.raises(ValueError, match="grids"):
            leveque_yee(p, Profile(np.array([1.0, 0.5, 0.2, 0.0])), 0.1, 0.1)

    def test_mass_change_is_recomputable(self):
        """The estimate is a pure function of the two stored levels."""
        rng = np.random.default_rng(3)
        prev = Profile(rng.uniform(0, 1, 1001))
        curr = Profile(rng.uniform(0, 1, 1001))
        first = leveque_yee(prev, curr, 0.25, 0.1)
        second = leveque_yee(prev.copy(), curr.copy(), 0.25, 0.1)
        assert first.numerator_mass_change == second.numerator_mass_change
        assert first.sigma_hat == second.sigma_hat


class TestTimestep:
    """Test suite for dt selection."""

    def test_hyperbolic_bound(self):
        cfg = StepConfig(Integrator.IMPLICIT_WB, dt_cap=1.0, cfl_safety=1.0)
        assert select_timestep(2.0, 0.1, cfg) == pytest.approx(0.05)

    def test_cap_binds_at_rest(self):
        cfg = StepConfig(Integrator.IMPLICIT_WB, dt_cap=1.0, sigma_floor=1e-6)
        assert select_timestep(0.0, 0.1, cfg) == 1.0

    def test_parabolic_bound_for_explicit(self):
        cfg = StepConfig(Integrator.EXPLICIT_WB, dt_cap=1.0, cfl_safety=1.0)
        assert select_timestep(2.0, 0.1, cfg) == pytest.approx(0.005)

    def test_parabolic_limit_on_implicit(self):
        cfg = StepConfig(Integrator.IMPLICIT_WB, dt_cap=0.05, parabolic_limit=True)
        assert select_timestep(2.0, 0.25, cfg) == pytest.approx(0.03125)

    def test_cfl_holds_in_floating_point(self):
        cfg = StepConfig(Integrator.IMPLICIT_WB, dt_cap=10.0)
        rng = np.random.default_rng(5)
        for sigma, dx in zip(rng.uniform(-5, 5, 500), rng.uniform(1e-3, 1, 500)):
            dt = select_timestep(sigma, dx, cfg)
            assert abs(sigma) * dt <= dx

    def test_invalid_config(self):
        with pytest.raises(ValueError, match="cfl_safety"):
            StepConfig(cfl_safety=1.5)

    def test_clip_to_horizon(self):
        assert clip_to_horizon(0.1, 1.0) == 0.1
        assert clip_to_horizon(0.1, 0.05) == 0.05
        assert clip_to_horizon(0.1, 0.15) == pytest.approx(0.075)


class TestThomas:
    """Test suite for the tridiagonal solver."""

    def test_identity(self):
        system = TridiagonalSystem(np.zeros(3), np.ones(3), np.zeros(3), np.array([3.0, 1.0, 4.0]))
        assert np.array_equal(thomas_solve(system), [3.0, 1.0, 4.0])

    def test_second_difference(self):
        system = TridiagonalSystem(-np.ones(3), 2 * np.ones(3), -np.ones(3), np.array([1.0, 0.0, 1.0]))
        assert np.allclose(thomas_solve(system), [1.0, 1.0, 1.0], atol=1e-15)

    def test_random_dominant_systems(self):
        rng = np.random.default_rng(17)
        for _ in range(50):
            n = int(rng.integers(3, 200))
            lower, upper = rng.uniform(-1, 1, n), rng.uniform(-1, 1, n)
            diagonal = np.abs(lower) + np.abs(upper) + rng.uniform(0.5, 2.0, n)
            rhs = rng.uniform(-1, 1, n)
            system = TridiagonalSystem(lower, diagonal, upper, rhs)

            x = thomas_solve(system)
            assert np.allclose(x, np.linalg.solve(system.to_dense(), rhs), rtol=0, atol=1e-10)

            banded = np.vstack([np.r_[0.0, upper[:-1]], diagonal, np.r_[lower[1:], 0.0]])
            assert np.allclose(x, solve_banded((1, 1), banded, rhs), rtol=0, atol=1e-10)
            assert np.abs(system.matvec(x) - rhs).max() <= 1e-10 * np.abs(rhs).max()

    def test_zero_pivot(self):
        system = TridiagonalSystem(np.zeros(3), np.array([1.0, 0.0, 1.0]), np.zeros(3), np.ones(3))
        with pytest.raises(PivotError, match="row 1"):
            thomas_solve(system)

    def test_inconsistent_lengths(self):
        with pytest.raises(ValueError, match="lengths"):
            TridiagonalSystem(np.zeros(2), np.ones(3), np.zeros(3), np.ones(3))


class TestMovingFrameStep:
    """Test suite for the implicit and explicit WB updates."""

    @pytest.fixture
    def grid(self):
        return make_grid(0.0, 2.0, 0.1)

    def test_implicit_reduces_to_heat_equation(self, grid):
        dt = 0.02
        curr = Profile(np.linspace(1.0, 0.0, grid.n_points) ** 2)
        system = assemble_implicit(curr, 0.0, dt, FKPP, grid, factor_fn=constant_factor(0.0))
        lam = dt / grid.dx**2
        assert np.allclose(system.lower[1:-1], -lam, rtol=0, atol=1e-12)
        assert np.allclose(system.diagonal[1:-1], 1 + 2 * lam, rtol=0, atol=1e-12)
        assert np.allclose(system.upper[1:-1], -lam, rtol=0, atol=1e-12)
        assert system.diagonal[0] == system.diagonal[-1] == 1.0
        assert system.rhs[0] == 1.0 and system.rhs[-1] == 0.0

    def test_explicit_reduces_to_heat_equation(self, grid):
        dt = 0.004
        u = np.linspace(1.0, 0.0, grid.n_points) ** 2
        stepped = wb_step_explicit(Profile(u), 0.0, dt, FKPP, grid, factor_fn=constant_factor(0.0))
        expected = u.copy()
        expected[1:-1] += dt / grid.dx**2 * (u[:-2] - 2 * u[1:-1] + u[2:])
        assert np.allclose(stepped.values, expected, rtol=0, atol=1e-12)

    def test_hand_built_row(self):
        """Interior row of a 3-point system from the sinh closed form."""
        grid = make_grid(0.0, 2.0, 1.0)
        dt = 0.1
        curr = Profile(np.array([1.0, 0.5, 0.0]))
        system = assemble_implicit(curr, 0.0, dt, FKPP, grid, factor_fn=constant_factor(-1.0))
        coth, csch = 1.3130352855, 0.8509181282
        assert system.lower[1] == pytest.approx(-dt * csch, abs=1e-10)
        assert system.diagonal[1] == pytest.approx(1 + 2 * dt * coth, abs=1e-10)
        assert system.upper[1] == pytest.approx(-dt * csch, abs=1e-10)

    @pytest.mark.parametrize("sigma,F", [(0.0, -1.0), (1.0, 0.2), (2.0, 1.0), (2.5, 1.8)])
    def test_stationary_data_preserved(self, grid, sigma, F):
        curr = exact_stationary_profile(sigma, F, grid)
        implicit = wb_step_implicit(curr, sigma, 0.05, FKPP, grid, factor_fn=constant_factor(F))
        explicit = wb_step_explicit(curr, sigma, 0.004, FKPP, grid, factor_fn=constant_factor(F))
        assert np.abs(implicit.values - curr.values).max() <= 1e-11
        assert np.abs(explicit.values - curr.values).max() <= 1e-11

    def test_explicit_and_implicit_agree_to_second_order(self):
        grid = make_grid(0.0, 80.0, 0.5)
        curr = Profile.sample(sigmoid_initial, grid)
        gaps = []
        for dt in (0.02, 0.01, 0.005):
            a = wb_step_implicit(curr, 1.0, dt, FKPP, grid)
            b = wb_step_explicit(curr, 1.0, dt, FKPP, grid)
            gaps.append(np.abs(a.values - b.values).max())
        assert gaps[0] / gaps[1] > 3.5
        assert gaps[1] / gaps[2] > 3.5


class TestShiftBack:
    """Test suite for the well-balanced shift to the stationary frame."""

    @pytest.fixture
    def grid(self):
        return make_grid(0.0, 4.0, 1.0)

    def test_zero_shift_is_identity(self, grid):
        moving = Profile(np.array([1.0, 0.9, 0.5, 0.2, 0.0]))
        assert np.array_equal(shift_back(moving, 0.0, 0.3, FKPP, grid).values, moving.values)

    def test_full_cell_shift(self, grid):
        moving = Profile(np.array([1.0, 0.9, 0.5, 0.2, 0.0]))
        shifted = shift_back(moving, 2.0, 0.5, FKPP, grid)
        assert np.allclose(shifted.values[1:-1], moving.values[:-2], rtol=0, atol=1e-12)
        assert shifted.values[0] == 1.0 and shifted.values[-1] == 0.0

    def test_half_cell_weights(self, grid):
        moving = Profile(np.array([1.0, 0.9, 0.5, 0.2, 0.0]))
        shifted = shift_back(moving, 1.0, 0.5, FKPP, grid, factor_fn=constant_factor(-1.0))
        t0, t1 = shift_row(1.0, -1.0, 1.0, 0.5).T
        assert shifted.values[2] == pytest.approx(t0 * 0.9 + t1 * 0.5, rel=1e-14)

    def test_negative_speed_is_mirrored(self, grid):
        moving = Profile(np.array([1.0, 0.9, 0.5, 0.2, 0.0]))
        shifted = shift_back(moving, -2.0, 0.5, FKPP, grid)
        assert np.allclose(shifted.values[1:-1], moving.values[2:], rtol=0, atol=1e-12)

    def test_cfl_violation(self, grid):
        moving = Profile(np.array([1.0, 0.9, 0.5, 0.2, 0.0]))
        with pytest.raises(NumericalError, match="CFL"):
            shift_back(moving, 3.0, 0.5, FKPP, grid)

    def test_negative_speed_logs_warning(self, grid, caplog):
        moving = Profile(np.array([1.0, 0.9, 0.5, 0.2, 0.0]))
        with caplog.at_level(logging.WARNING, logger="wbwave.scheme.wb_step"):
            shift_back(moving, -1.0, 0.5, FKPP, grid)
        assert any(r.levelno == logging.WARNING and "Mirrored" in r.getMessage() for r in caplog.records)


class TestAdvance:
    """Test suite for the full WB step."""

    def test_first_step_is_zero_wave(self):
        grid = make_grid(0.0, 80.0, 0.25)
        curr = Profile.sample(sigmoid_initial, grid)
        cfg = StepConfig(Integrator.IMPLICIT_WB, dt_cap=0.05)
        outcome = advance(curr, None, cfg, FKPP, grid)
        reference = zero_wave_step(curr, outcome.dt, FKPP, grid, Integrator.IMPLICIT_WB)
        assert outcome.speed.sigma_hat == 0.0
        assert np.array_equal(outcome.profile.values, reference.values)

    def test_well_balanced_exactness(self):
        """A frozen-coefficient traveling profile is translated exactly."""
        grid = make_grid(0.0, 1.0, 0.1)
        rng = np.random.default_rng(42)
        for _ in range(50):
            sigma, F = rng.uniform(0.0, 3.0), rng.uniform(-2.0, 2.0)
            curr = exact_stationary_profile(sigma, F, grid)
            for integrator, cap in ((Integrator.IMPLICIT_WB, 0.05), (Integrator.EXPLICIT_WB, 1.0)):
                cfg = StepConfig(integrator, dt_cap=cap)
                outcome = advance(curr, None, cfg, FKPP, grid, sigma_override=sigma, factor_fn=constant_factor(F))
                expected = [
                    cell_eval(sigma, F, grid.length, 1.0, 0.3, x - sigma * outcome.dt) for x in grid.x[1:-1]
                ]
                assert np.abs(outcome.profile.values[1:-1] - expected).max() <= 1e-10

    def test_translation_invariance(self):
        values = sigmoid_initial(np.arange(0.0, 80.25, 0.25))
        near = make_grid(0.0, 80.0, 0.25)
        far = make_grid(1000.0, 1080.0, 0.25)
        cfg = StepConfig(Integrator.IMPLICIT_WB, dt_cap=0.25)
        prev = Profile(values)
        curr = advance(prev, None, cfg, FKPP, near).profile
        a = advance(curr, prev, cfg, FKPP, near, prev_dt=0.25)
        b = advance(curr, prev, cfg, FKPP, far, prev_dt=0.25)
        assert np.array_equal(a.profile.values, b.profile.values)

    def test_ten_steps_from_sigmoid(self):
        grid = make_grid(0.0, 120.0, 0.25)
        cfg = StepConfig(Integrator.IMPLICIT_WB, dt_cap=0.25)
        prev, prev_dt = None, None
        curr = Profile.sample(sigmoid_initial, grid)
        speeds = []
        for _ in range(10):
            outcome = advance(curr, prev, cfg, FKPP, grid, prev_dt=prev_dt)
            prev, prev_dt, curr = curr, outcome.dt, outcome.profile
            speeds.append(outcome.speed.sigma_hat)
            assert abs(outcome.speed.sigma_hat) * outcome.dt <= grid.dx
        assert np.all(np.isfinite(speeds))
        assert all(0.0 < s <= 3.0 for s in speeds[2:])

    def test_horizon_clips_step(self):
        grid = make_grid(0.0, 80.0, 0.5)
        curr = Profile.sample(sigmoid_initial, grid)
        outcome = advance(curr, None, StepConfig(dt_cap=0.5), FKPP, grid, horizon=0.2)
        assert outcome.dt == 0.2

    def test_flush_subnormals(self):
        values = np.array([1e-300, 5e-324, -1e-310, 0.5, -2e-308])
        flush_subnormals(values)
        assert values.tolist() == [1e-300, 0.0, 0.0, 0.5, 0.0]

    def test_far_field_stays_exactly_zero(self):
        """An untouched far field stays exactly zero over many implicit steps."""
        grid = make_grid(0.0, 1500.0, 0.5)
        cfg = StepConfig(Integrator.IMPLICIT_WB, dt_cap=0.25)
        prev, prev_dt = None, None
        curr = Profile.sample(sigmoid_initial, grid)
        far = grid.x >= 1200.0
        assert np.all(curr.values[far] == 0.0)
        for _ in range(300):
            outcome = advance(curr, prev, cfg, FKPP, grid, prev_dt=prev_dt)
            prev, prev_dt, curr = curr, outcome.dt, outcome.profile
        tiny = np.finfo(float).tiny
        assert np.all(curr.values[far] == 0.0)
        assert np.all((curr.values == 0.0) | (np.abs(curr.values) >= tiny))

    def test_requires_previous_step(self):
        grid = make_grid(0.0, 10.0, 0.5)
        curr = Profile.sample(sigmoid_initial, grid)
        with pytest.raises(ValueError, match="prev_dt"):
            advance(curr, curr.copy(), StepConfig(), FKPP, grid)


@pytest.mark.slow
class TestComparisonPrinciple:
    """Long implicit run stays inside the invariant interval."""

    def test_values_stay_in_unit_interval(self):
        grid = make_grid(0.0, 200.0, 0.25)
        cfg = StepConfig(Integrator.IMPLICIT_WB, dt_cap=0.25)
        prev, prev_dt = None, None
        curr = Profile.sample(sigmoid_initial, grid)
        for _ in range(10_000):
            outcome = advance(curr, prev, cfg, FKPP, grid, prev_dt=prev_dt)
            prev, prev_dt, curr = curr, outcome.dt, outcome.profile
            assert curr.values.min() >= -1e-8
            assert curr.values.max() <= 1.0 + 1e-8
