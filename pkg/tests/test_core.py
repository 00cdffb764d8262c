import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from optbench.core import (
    Bounds,
    evaluate,
    gradient_fd,
    make_problem,
    sample_uniform,
)
from optbench.errors import (
    DimensionMismatch,
    DomainError,
    MissingSeed,
    NonFiniteInput,
    StochasticGradientUnsupported,
    Tier3Unimplementable,
    UnknownFunction,
)


class TestMakeProblem:
    def test_sphere_default_bounds(self):
        p = make_problem("sphere", 10)
        assert p.dimension == 10
        assert np.all(p.bounds.lower == -100.0)
        assert np.all(p.bounds.upper == 100.0)

    def test_fixed_dimension_rejected(self):
        with pytest.raises(DimensionMismatch):
            make_problem("booth", 5)

    def test_stochastic_needs_seed(self):
        with pytest.raises(MissingSeed):
            make_problem("quartic-variant", 4)

    def test_unknown_function(self):
        with pytest.raises(UnknownFunction):
            make_problem("no-such-fn", 2)

    def test_tier3_rejected(self):
        with pytest.raises(Tier3Unimplementable):
            make_problem("cola", 2)

    def test_min_dim_enforced(self):
        with pytest.raises(DimensionMismatch):
            make_problem("rosenbrock", 1)

    def test_dim_multiple_enforced(self):
        with pytest.raises(DimensionMismatch):
            make_problem("lennard-jones", 7)
        make_problem("lennard-jones", 9)

    def test_bounds_override(self):
        override = Bounds.uniform(-1.0, 1.0, 3)
        p = make_problem("sphere", 3, bounds_override=override)
        assert np.all(p.bounds.upper == 1.0)
        with pytest.raises(DimensionMismatch):
            make_problem("sphere", 2, bounds_override=override)


class TestEvaluate:
    def test_rastrigin_at_origin(self):
        p = make_problem("rastrigin", 2)
        assert evaluate(p, [0.0, 0.0]) == 0.0

    def test_easom_at_pi(self):
        p = make_problem("easom", 2)
        assert evaluate(p, [np.pi, np.pi]) == pytest.approx(-1.0, abs=1e-12)

    def test_goldstein_price(self):
        p = make_problem("goldstein-price", 2)
        assert evaluate(p, [0.0, -1.0]) == pytest.approx(3.0, abs=1e-12)

    def test_sphere_sum_of_squares(self):
        p = make_problem("sphere", 3)
        assert evaluate(p, [1.0, 2.0, 3.0]) == 14.0

    def test_drop_wave_argmin_below_zero(self):
        # independent oracle: dense grid plus a local pattern-search refinement
        p = make_problem("drop-wave", 2)
        xs = np.linspace(-5.12, 5.12, 801)
        best, best_xy = np.inf, None
        for xv in xs:
            for yv in (0.0,):  # radial symmetry in the first ring suffices radially
                v = evaluate(p, [xv, yv])
                if v < best:
                    best, best_xy = v, np.array([xv, yv])
        step = 0.01
        while step > 1e-9:
            moved = False
            for d in (np.array([step, 0]), np.array([-step, 0]), np.array([0, step]), np.array([0, -step])):
                v = evaluate(p, best_xy + d)
                if v < best:
                    best, best_xy = v, best_xy + d
                    moved = True
            if not moved:
                step /= 2.0
        assert best < -0.9  # strictly below the claimed minimum of 0

    def test_out_of_bounds_allowed(self):
        p = make_problem("sphere", 2)
        assert evaluate(p, [200.0, 0.0]) == 40000.0

    def test_non_finite_rejected(self):
        p = make_problem("sphere", 2)
        with pytest.raises(NonFiniteInput):
            evaluate(p, [np.nan, 0.0])

    def test_vincent_domain_error(self):
        p = make_problem("vincent", 2)
        with pytest.raises(DomainError):
            evaluate(p, [-1.0, 1.0])

    def test_csendes_domain_error_at_zero(self):
        p = make_problem("csendes", 2)
        with pytest.raises(DomainError):
            evaluate(p, [0.0, 0.5])

    def test_purity_bit_identical(self):
        rng = np.random.Generator(np.random.PCG64(5))
        for name in ("ackley-n1", "griewank", "levy-n13", "whitley"):
            p = make_problem(name, 2)
            x = rng.uniform(-1, 1, 2)
            assert evaluate(p, x) == evaluate(p, x)

    def test_seed_determinism_for_stochastic(self):
        a = make_problem("quartic-variant", 3, seed=99)
        b = make_problem("quartic-variant", 3, seed=99)
        xs = [np.array([0.1, 0.2, 0.3]), np.array([0.0, 0.0, 0.0]), np.array([1.0, -1.0, 0.5])]
        assert [evaluate(a, x) for x in xs] == [evaluate(b, x) for x in xs]


class TestGradient:
    def test_sphere_gradient(self):
        p = make_problem("sphere", 2)
        g = gradient_fd(p, [1.0, -2.0], 1e-6)
        assert np.allclose(g, [2.0, -4.0], atol=1e-4)

    def test_rastrigin_gradient_matches_hand_derivative(self):
        # oracle: d/dx of x^2 - 10 cos(2 pi x) is 2x + 20 pi sin(2 pi x)
        p = make_problem("rastrigin", 2)
        x = np.array([0.5, 0.5])
        expected = 2.0 * x + 20.0 * np.pi * np.sin(2.0 * np.pi * x)
        g = gradient_fd(p, x, 1e-6)
        assert np.allclose(g, expected, atol=1e-4)

    def test_stochastic_rejected(self):
        p = make_problem("quartic-variant", 2, seed=1)
        with pytest.raises(StochasticGradientUnsupported):
            gradient_fd(p, [0.1, 0.1])


class TestSampling:
    def test_repeatable_under_reset_stream(self):
        b = Bounds.uniform(-1.0, 1.0, 2)
        x1 = sample_uniform(b, np.random.Generator(np.random.PCG64(7)))
        x2 = sample_uniform(b, np.random.Generator(np.random.PCG64(7)))
        assert np.array_equal(x1, x2)

    def test_containment(self):
        b = Bounds.uniform(-5.0, 5.0, 3)
        rng = np.random.Generator(np.random.PCG64(3))
        for _ in range(100):
            assert b.contains(sample_uniform(b, rng))

    def test_law_of_large_numbers(self):
        b = Bounds.uniform(0.0, 1.0, 1)
        rng = np.random.Generator(np.random.PCG64(11))
        mean = np.mean([sample_uniform(b, rng)[0] for _ in range(10_000)])
        assert abs(mean - 0.5) < 0.02

    def test_degenerate_bounds_rejected(self):
        with pytest.raises(ValueError):
            Bounds.uniform(0.0, 0.0, 2)


@given(seed=st.integers(0, 2**32 - 1))
@settings(max_examples=25, deadline=None)
def test_symmetry_spot_checks(seed):
    # even-coordinate formulas: f(x) = f(-x) to within 1e-12
    rng = np.random.Generator(np.random.PCG64(seed))
    for name in ("sphere", "rastrigin", "ackley-n1"):
        p = make_problem(name, 3)
        x = rng.uniform(-4.0, 4.0, 3)
        assert evaluate(p, x) == pytest.approx(evaluate(p, -x), abs=1e-12)
    # griewank: even per coordinate along 1-D slices with the rest at 0
    p = make_problem("griewank", 3)
    for i in range(3):
        x = np.zeros(3)
        x[i] = rng.uniform(-100, 100)
        assert evaluate(p, x) == pytest.approx(evaluate(p, -x), abs=1e-12)


@given(
    lo=st.floats(-100.0, -0.5),
    width=st.floats(0.5, 100.0),
    dim=st.integers(1, 6),
    seed=st.integers(0, 2**32 - 1),
)
@settings(max_examples=50, deadline=None)
def test_sample_uniform_always_in_bounds(lo, width, dim, seed):
    b = Bounds.uniform(lo, lo + width, dim)
    rng = np.random.Generator(np.random.PCG64(seed))
    assert b.contains(sample_uniform(b, rng))
