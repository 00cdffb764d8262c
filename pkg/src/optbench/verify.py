"""Numerical audit of published claims: optima, separability, smoothness, modality.

Optimum claims are checked two ways: the claimed location must reproduce the
claimed value, and a seeded multistart (Latin-hypercube starts refined by
Nelder-Mead, plus one start at the claimed location) must not find anything
strictly better.  A refutation always carries a witness point that can be
re-checked with a single evaluation.  Property probes report findings, never
failures: label contradictions are recorded without mutating the catalog.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import catalog
from .core import (
    ProblemInstance,
    evaluate,
    gradient_fd,
    latin_hypercube,
    make_problem,
    stable_function_seed,
)
from .errors import DomainError, StochasticUnverifiable, Tier3Unimplementable
from .optimize import OptimizerConfig, nelder_mead

CONFIRMED = "confirmed"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"


@dataclass
class ClaimStatus:
    claim: dict
    verdict: str
    evidence: dict = field(default_factory=dict)
    budget_used: int = 0

    def as_dict(self):
        return {
            "claim": self.claim,
            "verdict": self.verdict,
            "evidence": self.evidence,
            "budget_used": self.budget_used,
        }


@dataclass
class VerificationReport:
    function: str
    dimension: int
    seed: int
    tier: int
    claims: list = field(default_factory=list)
    probes: dict = field(default_factory=dict)
    timestamp: float = 0.0

    def as_dict(self):
        return {
            "function": self.function,
            "dimension": self.dimension,
            "seed": self.seed,
            "tier": self.tier,
            "claims": [c.as_dict() for c in self.claims],
            "probes": self.probes,
            "timestamp": self.timestamp,
        }


def _claim_dict(record, dimension):
    loc = record.location_at(dimension)
    return {
        "value": record.value,
        "location": None if loc is None else [float(v) for v in loc],
        "provenance": record.provenance,
        "tol": record.tol,
        "note": record.note,
    }


def multistart_minimize(problem, budget, seed, extra_starts=()):
    """16*dim Latin-hypercube starts plus any extras, refined by Nelder-Mead."""
    rng = stable_function_seed(seed, problem.meta.name)
    starts = list(latin_hypercube(problem.bounds, 16 * problem.dimension, rng))
    starts.extend(np.asarray(s, dtype=float) for s in extra_starts)
    per_start = max(1, budget // len(starts))
    best_x, best_f, used = None, np.inf, 0
    for x0 in starts:
        result = nelder_mead(problem, x0, OptimizerConfig("nelder-mead", budget=per_start, seed=seed))
        used += result.evals_used
        if result.best_f < best_f:
            best_f, best_x = result.best_f, result.best_x
    return best_x, best_f, used


def verify_optimum(problem, claim, budget=None, tol=None, seed=0):
    """Audit one optimum claim.

    Confirmed: the claimed location reproduces the claimed value within tol and
    the multistart found nothing beyond-tolerance better.  Refuted: the search
    produced a witness strictly better (beyond tol) than what the claim
    delivers — the claimed value, or the value at the claimed location when
    that is what the claim pins down.  Anything else is inconclusive.
    """
    if problem.meta.properties.stochastic:
        raise StochasticUnverifiable(f"{problem.meta.name} is stochastic")
    if problem.meta.tier == 3:
        raise Tier3Unimplementable(problem.meta.name, problem.meta.tier3_reason)
    if budget is None:
        budget = 100 * problem.dimension
    if budget < 100 * problem.dimension:
        raise ValueError("budget must be at least 100 * dimension")
    tol = float(claim.tol if tol is None else tol)
    loc = claim.location_at(problem.dimension)
    evidence = {}
    point_value = None
    if loc is not None:
        try:
            point_value = evaluate(problem, loc)
            evidence["claimed_location_value"] = point_value
        except DomainError as exc:
            evidence["claimed_location_error"] = str(exc)
    extra = [loc] if loc is not None else []
    best_x, best_f, used = multistart_minimize(problem, budget, seed, extra_starts=extra)
    evidence["best_found"] = best_f
    evidence["best_point"] = [float(v) for v in best_x] if best_x is not None else None
    evidence["value_gap"] = best_f - claim.value
    point_ok = point_value is not None and abs(point_value - claim.value) <= tol
    reference = claim.value
    if point_value is not None and not point_ok:
        # the claimed minimizer itself is under audit: compare against what it delivers
        reference = min(reference, point_value) if point_value < reference else point_value
    if point_ok and best_f >= claim.value - tol:
        verdict = CONFIRMED
    elif loc is None and abs(best_f - claim.value) <= tol:
        verdict = CONFIRMED
    elif best_f < reference - tol:
        verdict = REFUTED
        evidence["witness"] = [float(v) for v in best_x]
        evidence["witness_value"] = best_f
    else:
        verdict = INCONCLUSIVE
    return ClaimStatus(_claim_dict(claim, problem.dimension), verdict, evidence, used)


def test_separability(problem, n_points=20, h=1e-4, tol=1e-6, seed=0):
    """Additive-separability probe via central-difference mixed partials.

    Verdict is separable iff the largest |d2f/dx_i dx_j| over the probe points
    stays within tol * (1 + max |f|).  Product-separable functions are expected
    to test non-separable under this (additive) criterion.
    """
    meta = problem.meta
    if meta.properties.stochastic:
        raise StochasticUnverifiable(f"{meta.name} is stochastic")
    rng = stable_function_seed(seed, meta.name + "#sep")
    n = problem.dimension
    lo = problem.bounds.lower + 0.05 * problem.bounds.width
    hi = problem.bounds.upper - 0.05 * problem.bounds.width
    max_mixed, max_abs_f, witness = 0.0, 0.0, None
    points_used = 0
    for _ in range(n_points):
        x = rng.uniform(lo, hi)
        try:
            fx = evaluate(problem, x)
        except DomainError:
            continue
        points_used += 1
        max_abs_f = max(max_abs_f, abs(fx))
        for i in range(n):
            for j in range(i + 1, n):
                try:
                    m = _mixed_partial(problem, x, i, j, h)
                except DomainError:
                    continue
                if abs(m) > max_mixed:
                    max_mixed = abs(m)
                    witness = {"point": [float(v) for v in x], "i": i, "j": j, "value": m}
    threshold = tol * (1.0 + max_abs_f)
    return {
        "verdict": "separable" if max_mixed <= threshold else "non-separable",
        "max_mixed_partial": max_mixed,
        "threshold": threshold,
        "witness": witness,
        "points_used": points_used,
        "labeled_separable": meta.properties.separable,
    }


def _mixed_partial(problem, x, i, j, h):
    e = np.zeros(problem.dimension)
    ei, ej = e.copy(), e.copy()
    ei[i] = h
    ej[j] = h
    return (
        evaluate(problem, x + ei + ej)
        - evaluate(problem, x + ei - ej)
        - evaluate(problem, x - ei + ej)
        + evaluate(problem, x - ei - ej)
    ) / (4.0 * h * h)


def probe_smoothness(problem, n_points=20, seed=0):
    """Finite-value and gradient-agreement probes at random interior points.

    Findings, not failures: entries labeled continuous that go non-finite, and
    entries labeled differentiable whose h = 1e-5 / 1e-6 central differences
    disagree beyond 1e-3 relative, are flagged.
    """
    meta = problem.meta
    rng = stable_function_seed(seed, meta.name + "#smooth")
    lo = problem.bounds.lower + 0.05 * problem.bounds.width
    hi = problem.bounds.upper - 0.05 * problem.bounds.width
    non_finite = 0
    domain_errors = 0
    gradient_fail = 0
    checked = 0
    worst_rel = 0.0
    for _ in range(n_points):
        x = rng.uniform(lo, hi)
        try:
            fx = evaluate(problem, x)
        except DomainError:
            domain_errors += 1
            continue
        if not np.isfinite(fx):
            non_finite += 1
            continue
        if meta.properties.stochastic:
            continue
        try:
            g5 = gradient_fd(problem, x, 1e-5)
            g6 = gradient_fd(problem, x, 1e-6)
        except DomainError:
            domain_errors += 1
            continue
        checked += 1
        rel = np.abs(g5 - g6) / np.maximum(1.0, np.maximum(np.abs(g5), np.abs(g6)))
        worst_rel = max(worst_rel, float(np.max(rel)) if rel.size else 0.0)
        if np.any(rel > 1e-3) or not (np.all(np.isfinite(g5)) and np.all(np.isfinite(g6))):
            gradient_fail += 1
    findings = []
    if meta.properties.continuous and non_finite > 0:
        findings.append("labeled continuous but produced non-finite values")
    if meta.properties.differentiable and gradient_fail > n_points // 2:
        findings.append("labeled differentiable but gradients disagree at most probe points")
    return {
        "points": n_points,
        "checked": checked,
        "non_finite": non_finite,
        "domain_errors": domain_errors,
        "gradient_disagreements": gradient_fail,
        "worst_relative_gap": worst_rel,
        "findings": findings,
    }


def count_grid_minima_2d(problem, resolution):
    """Strict local minima of the resolution x resolution grid over the bounds.

    A probe, not a proof: grid counts under- and over-count at finite
    resolution.  Singular points evaluate to NaN and never count.
    """
    if problem.dimension != 2:
        raise ValueError("grid modality probe requires a 2-D instance")
    if resolution < 3:
        raise ValueError("resolution must be at least 3")
    xs = np.linspace(problem.bounds.lower[0], problem.bounds.upper[0], resolution)
    ys = np.linspace(problem.bounds.lower[1], problem.bounds.upper[1], resolution)
    grid = np.empty((resolution, resolution))
    for i, xv in enumerate(xs):
        for j, yv in enumerate(ys):
            try:
                grid[i, j] = evaluate(problem, np.array([xv, yv]))
            except DomainError:
                grid[i, j] = np.nan
    count = 0
    center = grid[1:-1, 1:-1]
    strict_below = np.ones_like(center, dtype=bool)
    for di in (-1, 0, 1):
        for dj in (-1, 0, 1):
            if di == 0 and dj == 0:
                continue
            neighbor = grid[1 + di : resolution - 1 + di, 1 + dj : resolution - 1 + dj]
            with np.errstate(invalid="ignore"):
                strict_below &= center < neighbor
    count = int(np.sum(strict_below & np.isfinite(center)))
    return count


def full_report(name, dim=None, seed=0, budget=None, grid_resolution=201):
    """Aggregate all applicable probes for one entry; deterministic under seed."""
    entry = catalog.lookup(name)
    meta = entry.meta
    if meta.tier == 3:
        raise Tier3Unimplementable(meta.name, meta.tier3_reason)
    if dim is None or meta.dim_class.kind == "fixed":
        use_dim = meta.dim_class.default_dimension() if meta.dim_class.kind != "fixed" else meta.dim_class.n
        if dim is not None and meta.dim_class.kind == "scalable":
            use_dim = max(dim, meta.dim_class.min_dim)
            rem = use_dim % meta.dim_class.multiple
            if rem:
                use_dim += meta.dim_class.multiple - rem
    else:
        use_dim = max(dim, meta.dim_class.min_dim)
        rem = use_dim % meta.dim_class.multiple
        if rem:
            use_dim += meta.dim_class.multiple - rem
    if budget is None:
        budget = max(10_000, 100 * use_dim)
    report = VerificationReport(
        function=meta.name, dimension=use_dim, seed=seed, tier=meta.tier, timestamp=time.time()
    )
    stochastic = meta.properties.stochastic
    problem = make_problem(meta.name, use_dim, seed=seed if stochastic else None)
    for record in meta.optima:
        if not record.applies_to(use_dim):
            continue
        if stochastic:
            report.claims.append(
                ClaimStatus(
                    _claim_dict(record, use_dim),
                    INCONCLUSIVE,
                    {"note": "stochastic objective; optimum audits are undefined"},
                    0,
                )
            )
            continue
        report.claims.append(verify_optimum(problem, record, budget=budget, seed=seed))
    report.probes["smoothness"] = probe_smoothness(problem, seed=seed)
    if not stochastic and meta.properties.continuous and meta.properties.differentiable:
        report.probes["separability"] = test_separability(problem, seed=seed)
        observed = report.probes["separability"]["verdict"]
        labeled = "separable" if meta.properties.separable else "non-separable"
        report.probes["separability"]["label_consistent"] = observed == labeled
    if use_dim == 2 and not stochastic:
        count = count_grid_minima_2d(problem, grid_resolution)
        modality = meta.properties.modality
        consistency = "recorded"
        if modality == "unimodal":
            consistency = "consistent" if count <= 1 else "inconsistent"
        elif modality == "multimodal":
            consistency = "consistent" if count > 1 else "inconsistent"
        report.probes["modality"] = {
            "grid_resolution": grid_resolution,
            "grid_local_minima": count,
            "label": modality,
            "consistency_at_resolution": consistency,
        }
    return report
