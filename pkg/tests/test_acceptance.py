"""
Acceptance Tests

Front speeds and delay coefficients of complete runs. The long studies are
marked slow and deselected by default; run them with `pytest -m slow`.
"""
import pytest

from wbwave.analysis import sign_changes
from wbwave.harness import Simulation, build_config, convergence_tables, execute_run, expand_preset, run_sweep


def front_run(tmp_path, **overrides):
    values = {
        "model": "fkpp",
        "scheme": "wb_implicit",
        "x_min": 0.0,
        "x_max": 700.0,
        "dx": 0.25,
        "t_end": 300.0,
        "output_dir": str(tmp_path / "run"),
    }
    values.update(overrides)
    return execute_run(build_config(values), write=False)


class TestWaveSpeed:
    """Final LeVeque-Yee speeds against the asymptotic predictions."""

    def test_fkpp_speed_below_two(self, tmp_path):
        _, summary = front_run(tmp_path)
        assert 2.0 - 3.0 / 600.0 - 5e-3 <= summary.final_speed <= 2.0
        assert summary.t_reached == 300.0

    def test_cubic_pushed_speed(self, tmp_path):
        _, summary = front_run(tmp_path, model="cubic", a=3.0, dx=0.125)
        assert summary.final_speed == pytest.approx(2.041241, abs=5e-3)

    def test_wb_beats_splitting_on_coarse_mesh(self, tmp_path):
        expected = 2.0 - 3.0 / 600.0
        _, wb = front_run(tmp_path, dx=0.5, same_dt=True)
        _, os_run = front_run(tmp_path, dx=0.5, same_dt=True, scheme="os")
        assert abs(wb.final_speed - expected) < abs(os_run.final_speed - expected)

    def test_wb_beats_zero_wave_on_coarse_mesh(self, tmp_path):
        expected = 2.0 - 3.0 / 600.0
        _, wb = front_run(tmp_path, dx=0.5, x_max=900.0, same_dt=True)
        _, frozen = front_run(tmp_path, dx=0.5, x_max=900.0, same_dt=True, scheme="zero_wave_implicit")
        assert abs(wb.final_speed - expected) < abs(frozen.final_speed - expected)

    def test_exact_pushed_front_keeps_its_shape(self, tmp_path):
        _, summary = front_run(
            tmp_path, model="cubic", a=3.0, dx=0.125, x_max=200.0, t_end=20.0, initial="exact_pushed_front",
        )
        assert summary.profile_error is not None
        assert summary.profile_error <= 1e-2
        assert summary.final_speed == pytest.approx(2.041241, abs=5e-3)


@pytest.mark.slow
class TestLongStudies:
    """Full-scale speed and the delay-coefficient fits."""

    def test_fkpp_speed_full_scale(self, tmp_path):
        _, summary = front_run(tmp_path, x_max=3080.0, t_end=1500.0)
        assert -5e-3 <= summary.final_speed - 2.0 < 0.0

    @pytest.mark.parametrize("model,a,alpha", [("fkpp", 0.0, -1.5), ("cubic", 2.0, -0.5)])
    def test_log_delay_coefficient(self, tmp_path, model, a, alpha):
        cfg = build_config({
            "model": model,
            "a": a,
            "scheme": "wb_implicit",
            "x_max": 1300.0,
            "dx": 0.125,
            "t_end": 600.0,
            "output_dir": str(tmp_path / "run"),
        })
        simulation = Simulation(cfg)
        simulation.run()
        fit = simulation.fit()
        assert fit is not None
        assert fit.alpha == pytest.approx(alpha, abs=0.25)

    def test_splitting_speed_full_scale(self, tmp_path):
        _, summary = front_run(tmp_path, scheme="os", dx=0.5, dt_cap=0.05, x_max=3080.0, t_end=1500.0)
        assert summary.final_speed == pytest.approx(2.0, abs=5e-3)

    def test_fkpp_delay_coefficient_full_scale(self, tmp_path):
        cfg = build_config({
            "model": "fkpp",
            "scheme": "wb_implicit",
            "x_max": 3080.0,
            "dx": 0.125,
            "t_end": 1500.0,
            "output_dir": str(tmp_path / "run"),
        })
        simulation = Simulation(cfg)
        simulation.run()
        fit = simulation.fit()
        assert fit is not None
        assert fit.alpha == pytest.approx(-1.5, abs=0.15)


@pytest.mark.slow
class TestPresetStudies:
    """Single entries and sweeps of the named presets at full horizon."""

    @pytest.mark.parametrize("name,dx,speed", [("fkpp_speed", 0.5, 2.0), ("cubic_pushed", 0.0625, 2.041241)])
    def test_preset_final_speed(self, tmp_path, name, dx, speed):
        (cfg,) = expand_preset(name, dx=[dx], schemes=["wb_implicit"], output_dir=str(tmp_path))
        _, summary = execute_run(cfg, write=False)
        assert summary.final_speed == pytest.approx(speed, abs=5e-3)

    def test_splitting_sign_change_on_pulled_cubic(self, tmp_path):
        configs = expand_preset(
            "cubic_pulled", dx=[2.0 ** -k for k in range(1, 6)], schemes=["os"], output_dir=str(tmp_path),
        )
        tables, skipped = convergence_tables(run_sweep(configs))
        assert skipped == []
        changes = sign_changes(tables["os"])
        assert any(2.0 ** -4 <= dx <= 2.0 ** -2 for dx in changes)
