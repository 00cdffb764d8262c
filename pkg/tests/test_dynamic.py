import numpy as np
import pytest

from optbench import dynamic
from optbench.core import evaluate, make_problem
from optbench.errors import BadDimension, CorruptSnapshot


class TestInit:
    def test_fresh_session_state(self):
        s = dynamic.init_session("ddb", 2, seed=42, step_sigma=0.05, history_capacity=32)
        assert np.array_equal(s.theta, [0.0, 0.0])
        assert s.eval_count == 0
        assert len(s.history) == 0

    def test_ddb_needs_two_coordinates(self):
        with pytest.raises(BadDimension):
            dynamic.init_session("ddb", 1, seed=1)

    def test_cddb_accepts_one_dimension(self):
        dynamic.init_session("cddb", 1, seed=1)

    def test_same_args_same_first_output(self):
        a = dynamic.init_session("ddb", 2, seed=9)
        b = dynamic.init_session("ddb", 2, seed=9)
        x = np.array([0.3, -0.4])
        assert dynamic.eval_ddb(a, x) == dynamic.eval_ddb(b, x)


class TestWalk:
    def test_zero_sigma_keeps_theta(self):
        s = dynamic.init_session("ddb", 2, seed=3, step_sigma=0.0)
        for _ in range(5):
            dynamic.step_state(s)
        assert np.array_equal(s.theta, [0.0, 0.0])

    def test_increment_standard_deviation_in_chi_square_band(self):
        # 100 normal draws with sigma 0.05: the sample sd lies in [0.035, 0.065]
        s = dynamic.init_session("ddb", 2, seed=7, step_sigma=0.05)
        thetas = [s.theta.copy()]
        for _ in range(100):
            dynamic.step_state(s)
            thetas.append(s.theta.copy())
        increments = np.diff(np.array(thetas), axis=0)
        for c in range(2):
            sd = np.std(increments[:, c], ddof=1)
            assert 0.035 <= sd <= 0.065

    def test_same_seed_same_trajectory(self):
        a = dynamic.init_session("cddb", 3, seed=11)
        b = dynamic.init_session("cddb", 3, seed=11)
        for _ in range(10):
            dynamic.step_state(a)
            dynamic.step_state(b)
        assert np.array_equal(a.theta, b.theta)


class TestBasin:
    def test_zero_point_zero_theta_noise_suppressed(self):
        s = dynamic.init_session("ddb", 2, seed=1, noise_sigma=0.0)
        assert dynamic.eval_ddb(s, np.zeros(2)) == 0.0

    def test_quarter_pi_value(self):
        s = dynamic.init_session("ddb", 2, seed=1, noise_sigma=0.0)
        x = np.array([np.pi / 2.0, 0.0])
        # direct arithmetic: sin(pi/2) cos(0) e^{-(pi/2)^2} = e^{-2.4674} = 0.08480
        expected = np.exp(-((np.pi / 2.0) ** 2))
        assert dynamic.eval_ddb(s, x) == pytest.approx(expected, abs=1e-12)
        assert expected == pytest.approx(0.0848, abs=1e-4)

    def test_noise_variance_dominates(self):
        s = dynamic.init_session("ddb", 2, seed=5, step_sigma=0.0)
        vals = [dynamic.eval_ddb(s, np.zeros(2)) for _ in range(1000)]
        assert np.var(vals) >= 0.009

    def test_drift_moves_the_landscape(self):
        s = dynamic.init_session("ddb", 2, seed=13, step_sigma=0.05, noise_sigma=0.0)
        x = np.array([0.5, 0.5])
        vals = [dynamic.eval_ddb(s, x) for _ in range(100)]
        assert max(vals) - min(vals) > 0.0

    def test_stationary_without_drift_or_noise(self):
        s = dynamic.init_session("ddb", 2, seed=13, step_sigma=0.0, noise_sigma=0.0)
        x = np.array([0.5, 0.5])
        vals = {dynamic.eval_ddb(s, x) for _ in range(100)}
        assert len(vals) == 1

    def test_eval_count_increments(self):
        s = dynamic.init_session("ddb", 2, seed=1)
        for k in range(5):
            dynamic.eval_ddb(s, np.zeros(2))
        assert s.eval_count == 5


class TestMemoryCoupled:
    def test_zero_theta_zero_x_gives_tenth_per_coordinate(self):
        for n in (1, 2, 5):
            s = dynamic.init_session("cddb", n, seed=2, step_sigma=0.0, noise_sigma=0.0)
            assert dynamic.eval_cddb(s, np.zeros(n)) == pytest.approx(0.1 * n, abs=0.0)

    def test_zero_theta_general_x(self):
        s = dynamic.init_session("cddb", 3, seed=2, step_sigma=0.0, noise_sigma=0.0)
        x = np.array([0.7, -1.2, 2.5])
        assert dynamic.eval_cddb(s, x) == pytest.approx(float(np.sum(np.sin(x))) + 0.3, abs=1e-12)

    def test_determinism(self):
        a = dynamic.init_session("cddb", 2, seed=21)
        b = dynamic.init_session("cddb", 2, seed=21)
        rng = np.random.Generator(np.random.PCG64(0))
        xs = rng.uniform(-5, 5, size=(50, 2))
        assert [dynamic.eval_cddb(a, x) for x in xs] == [dynamic.eval_cddb(b, x) for x in xs]

    def test_history_bounded(self):
        s = dynamic.init_session("cddb", 2, seed=4, history_capacity=8)
        for _ in range(40):
            dynamic.eval_cddb(s, np.zeros(2))
        assert len(s.history) == 8

    def test_noise_amplitude_tracks_history(self):
        a = dynamic.init_session("cddb", 2, seed=6)
        b = dynamic.init_session("cddb", 2, seed=6)
        assert a.noise_amplitude() == b.noise_amplitude() == 0.1  # empty history
        a.state.history.append((np.zeros(2), 1.0))
        b.state.history.append((np.zeros(2), 2.0))
        amp_a = 0.1 * (1.0 + abs(np.sin(1.0)))
        amp_b = 0.1 * (1.0 + abs(np.sin(2.0)))
        assert a.noise_amplitude() == pytest.approx(amp_a)
        assert b.noise_amplitude() == pytest.approx(amp_b)
        assert a.noise_amplitude() != b.noise_amplitude()

    def test_overflow_saturates_with_flag(self):
        s = dynamic.init_session("cddb", 2, seed=8, noise_sigma=0.0)
        s.state.theta = np.array([300.0, 300.0])
        v = dynamic.eval_cddb(s, np.array([5.0, 5.0]))
        assert np.isfinite(v)
        assert abs(v) <= 1e308
        assert s.saturated


class TestSnapshot:
    def test_round_trip_continues_identically(self):
        s = dynamic.init_session("cddb", 2, seed=33)
        xs = np.random.Generator(np.random.PCG64(1)).uniform(-5, 5, size=(7, 2))
        for x in xs[:4]:
            dynamic.eval_cddb(s, x)
        blob = dynamic.snapshot(s)
        t = dynamic.restore(blob)
        for x in xs[4:]:
            assert dynamic.eval_cddb(s, x) == dynamic.eval_cddb(t, x)

    def test_fresh_snapshot_contents(self):
        s = dynamic.init_session("ddb", 2, seed=1)
        t = dynamic.restore(dynamic.snapshot(s))
        assert np.array_equal(t.theta, [0.0, 0.0])
        assert len(t.history) == 0
        assert t.eval_count == 0

    def test_truncated_blob_rejected(self):
        s = dynamic.init_session("ddb", 2, seed=1)
        blob = dynamic.snapshot(s)
        with pytest.raises(CorruptSnapshot):
            dynamic.restore(blob[: len(blob) // 2])

    def test_tampered_blob_rejected(self):
        s = dynamic.init_session("ddb", 2, seed=1)
        blob = dynamic.snapshot(s).decode()
        tampered = blob.replace('"eval_count": 0', '"eval_count": 3').encode()
        with pytest.raises(CorruptSnapshot):
            dynamic.restore(tampered)


class TestProblemInstanceIntegration:
    def test_catalog_entry_drives_a_session(self):
        p = make_problem("dynamic-deceptive-basin", 2, seed=42)
        v1 = evaluate(p, [0.0, 0.0])
        v2 = evaluate(p, [0.0, 0.0])
        assert p.eval_count == 2
        assert p.session.eval_count == 2
        assert v1 != v2  # noise plus drift

    def test_two_instances_same_seed_agree(self):
        rng = np.random.Generator(np.random.PCG64(0))
        xs = rng.uniform(-5, 5, size=(100, 2))
        a = make_problem("dynamic-deceptive-basin", 2, seed=42)
        b = make_problem("dynamic-deceptive-basin", 2, seed=42)
        assert [evaluate(a, x) for x in xs] == [evaluate(b, x) for x in xs]
