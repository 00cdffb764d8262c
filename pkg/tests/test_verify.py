import numpy as np
import pytest

from optbench import catalog, verify
from optbench.core import evaluate, make_problem
from optbench.errors import StochasticUnverifiable, Tier3Unimplementable


def record_for(name, provenance=None):
    for rec in catalog.lookup(name).meta.optima:
        if provenance is None or rec.provenance == provenance:
            return rec
    raise AssertionError(f"no record for {name}")


class TestVerifyOptimum:
    def test_schwefel_shifted_confirmed(self):
        p = make_problem("schwefel", 2)
        status = verify.verify_optimum(p, record_for("schwefel"), budget=10_000, tol=1e-3, seed=1)
        assert status.verdict == "confirmed"

    def test_drop_wave_claim_refuted_with_ring_witness(self):
        p = make_problem("drop-wave", 2)
        status = verify.verify_optimum(p, record_for("drop-wave"), budget=10_000, tol=1e-6, seed=1)
        assert status.verdict == "refuted"
        witness = np.array(status.evidence["witness"])
        # soundness: the witness is re-checkable by one evaluation
        assert evaluate(p, witness) < 0.0 - 1e-6
        # the witness sits on the first cosine ring (12 r ~ pi)
        assert np.sqrt(np.sum(witness**2)) == pytest.approx(np.pi / 12.0, abs=0.02)

    def test_sphere_confirmed_tight(self):
        p = make_problem("sphere", 2)
        status = verify.verify_optimum(p, record_for("sphere"), budget=10_000, tol=1e-9, seed=1)
        assert status.verdict == "confirmed"

    def test_stochastic_unverifiable(self):
        p = make_problem("quartic-variant", 2, seed=1)
        with pytest.raises(StochasticUnverifiable):
            verify.verify_optimum(p, record_for("quartic-variant"), budget=1000)

    def test_budget_precondition(self):
        p = make_problem("sphere", 4)
        with pytest.raises(ValueError):
            verify.verify_optimum(p, record_for("sphere"), budget=100)

    def test_determinism(self):
        p1 = make_problem("rastrigin", 2)
        p2 = make_problem("rastrigin", 2)
        s1 = verify.verify_optimum(p1, record_for("rastrigin"), budget=5000, seed=3)
        s2 = verify.verify_optimum(p2, record_for("rastrigin"), budget=5000, seed=3)
        assert s1.as_dict() == s2.as_dict()

    def test_monotone_budget_never_flips_confirmed_to_refuted(self):
        rec = record_for("ackley-n1")
        results = []
        for budget in (3_000, 10_000, 30_000):
            p = make_problem("ackley-n1", 2)
            results.append(verify.verify_optimum(p, rec, budget=budget, seed=5))
        bests = [r.evidence["best_found"] for r in results]
        assert all(a >= b - 1e-15 for a, b in zip(bests, bests[1:]))
        assert all(r.verdict == "confirmed" for r in results)


class TestSeparability:
    @pytest.mark.parametrize("name", ["sphere", "sum-squares", "rastrigin", "powell-sum"])
    def test_additively_separable(self, name):
        p = make_problem(name, 2)
        out = verify.test_separability(p, n_points=20, h=1e-4, tol=1e-6, seed=1)
        assert out["verdict"] == "separable"

    @pytest.mark.parametrize("name", ["rosenbrock", "matyas", "mccormick"])
    def test_non_separable_with_witness(self, name):
        p = make_problem(name, 2)
        out = verify.test_separability(p, n_points=20, h=1e-4, tol=1e-6, seed=1)
        assert out["verdict"] == "non-separable"
        assert out["witness"] is not None
        assert abs(out["witness"]["value"]) > out["threshold"]

    def test_matyas_cross_term_magnitude(self):
        # hand derivative: d2/dx dy of -0.48 x y is -0.48
        p = make_problem("matyas", 2)
        out = verify.test_separability(p, n_points=20, h=1e-4, tol=1e-6, seed=1)
        assert out["max_mixed_partial"] == pytest.approx(0.48, rel=1e-3)

    def test_product_separable_tests_non_separable(self):
        # additive criterion on a multiplicative form
        p = make_problem("alpine-n2", 2)
        out = verify.test_separability(p, n_points=20, h=1e-4, tol=1e-6, seed=1)
        assert out["verdict"] == "non-separable"
        assert out["labeled_separable"] is True

    def test_stochastic_rejected(self):
        p = make_problem("mccormick-with-noise", 2, seed=1)
        with pytest.raises(StochasticUnverifiable):
            verify.test_separability(p)


class TestSmoothness:
    def test_step_fails_gradient_agreement(self):
        p = make_problem("step", 2)
        out = verify.probe_smoothness(p, n_points=20, seed=1)
        assert out["gradient_disagreements"] > 10
        assert any("labeled differentiable" in f for f in out["findings"])

    def test_sphere_passes(self):
        p = make_problem("sphere", 2)
        out = verify.probe_smoothness(p, n_points=20, seed=1)
        assert out["gradient_disagreements"] == 0
        assert out["non_finite"] == 0
        assert not out["findings"]

    def test_bukin_n6_probe_finds_the_valley(self):
        # the square-root-of-absolute-value valley breaks the two-step agreement
        p = make_problem("bukin-n6", 2)
        out = verify.probe_smoothness(p, n_points=40, seed=3)
        assert out["gradient_disagreements"] > 0


class TestGridModality:
    def test_sphere_unimodal(self):
        p = make_problem("sphere", 2)
        assert verify.count_grid_minima_2d(p, 201) == 1

    def test_himmelblau_four_minima(self):
        p = make_problem("himmelblau", 2)
        assert verify.count_grid_minima_2d(p, 401) == 4

    def test_ripple25_at_least_25(self):
        p = make_problem("ripple-25", 2)
        assert verify.count_grid_minima_2d(p, 501) >= 25

    def test_separable_product_oracle(self):
        # for additively separable f(x, y) = g(x) + h(y), the 2-D grid count
        # equals the product of the per-axis 1-D counts on the same grid
        for name, res in (("sphere", 101), ("rastrigin", 101)):
            p = make_problem(name, 2)
            count_2d = verify.count_grid_minima_2d(p, res)
            axis_counts = []
            for axis in range(2):
                xs = np.linspace(p.bounds.lower[axis], p.bounds.upper[axis], res)
                vals = []
                for v in xs:
                    x = np.zeros(2)
                    x[axis] = v
                    vals.append(evaluate(p, x))
                vals = np.array(vals)
                axis_counts.append(
                    int(np.sum((vals[1:-1] < vals[:-2]) & (vals[1:-1] < vals[2:])))
                )
            assert count_2d == axis_counts[0] * axis_counts[1]

    def test_requires_2d(self):
        p = make_problem("sphere", 3)
        with pytest.raises(ValueError):
            verify.count_grid_minima_2d(p, 51)


class TestFullReport:
    def test_sphere_all_confirmed(self):
        report = verify.full_report("sphere", 2, seed=1, budget=10_000)
        assert report.claims
        assert all(c.verdict == "confirmed" for c in report.claims)

    def test_drop_wave_refuted(self):
        report = verify.full_report("drop-wave", 2, seed=1, budget=10_000)
        assert any(c.verdict == "refuted" for c in report.claims)

    def test_cola_unimplementable(self):
        with pytest.raises(Tier3Unimplementable):
            verify.full_report("cola", 2, seed=1)

    def test_regeneration_reproduces_verdicts(self):
        a = verify.full_report("six-hump-camel", 2, seed=9, budget=5000)
        b = verify.full_report("six-hump-camel", 2, seed=9, budget=5000)
        da, db = a.as_dict(), b.as_dict()
        da.pop("timestamp"), db.pop("timestamp")
        assert da == db

    def test_stochastic_entry_reports_inconclusive_claims(self):
        report = verify.full_report("quartic-variant", 2, seed=4, budget=5000)
        assert all(c.verdict == "inconclusive" for c in report.claims)

    def test_fixed_dim_entry_ignores_requested_dim(self):
        report = verify.full_report("booth", 7, seed=1, budget=5000)
        assert report.dimension == 2
