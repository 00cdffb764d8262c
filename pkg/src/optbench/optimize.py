"""Baseline metaheuristics: random search, Nelder-Mead, differential evolution.

Every run is a pure function of (problem, config, seed): the incumbent trace is
non-increasing, the evaluation budget is accounted exactly against the
instrumented counter on the problem instance, and rerunning with the same seed
reproduces the result bit for bit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

import numpy as np

from .core import ProblemInstance, evaluate, make_problem, sample_uniform, stable_function_seed
from .errors import DomainError


@dataclass(frozen=True)
class OptimizerConfig:
    kind: str
    budget: int
    seed: int = 0
    # Nelder-Mead coefficients
    reflection: float = 1.0
    expansion: float = 2.0
    contraction: float = 0.5
    shrink: float = 0.5
    # Differential evolution parameters
    population: int = 50
    F: float = 0.5
    CR: float = 0.9

    def __post_init__(self):
        if self.kind not in ("random-search", "nelder-mead", "differential-evolution"):
            raise ValueError(f"unknown optimizer kind: {self.kind}")
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.kind == "differential-evolution":
            if self.population < 4:
                raise ValueError("DE needs a population of at least 4 (three donors + target)")
            if not (0.0 < self.F <= 2.0):
                raise ValueError("F must lie in (0, 2]")
            if not (0.0 <= self.CR <= 1.0):
                raise ValueError("CR must lie in [0, 1]")


@dataclass
class OptRunResult:
    best_x: np.ndarray
    best_f: float
    evals_used: int
    history: list = field(default_factory=list)
    seed: int = 0
    wall_time: float = 0.0
    flagged_domain_errors: int = 0

    def as_dict(self, include_history=True):
        d = {
            "best_x": [float(v) for v in self.best_x],
            "best_f": float(self.best_f),
            "evals_used": int(self.evals_used),
            "seed": int(self.seed),
            "wall_time": float(self.wall_time),
        }
        if include_history:
            d["history"] = [[int(i), float(f)] for i, f in self.history]
        return d


class _Tracker:
    """Counts evaluations and maintains the non-increasing incumbent trace."""

    def __init__(self, problem, budget):
        self.problem = problem
        self.budget = budget
        self.used = 0
        self.best_x = None
        self.best_f = np.inf
        self.history = []
        self.domain_errors = 0

    def exhausted(self):
        return self.used >= self.budget

    def __call__(self, x):
        if self.exhausted():
            raise _BudgetExhausted
        self.used += 1
        try:
            f = evaluate(self.problem, x)
        except DomainError:
            self.domain_errors += 1
            f = np.inf
        if f < self.best_f:
            self.best_f = f
            self.best_x = np.array(x, dtype=float)
            self.history.append((self.used, float(f)))
        return f


class _BudgetExhausted(Exception):
    pass


def _finish(tracker, seed, t0):
    if tracker.best_x is None:
        tracker.best_x = np.full(tracker.problem.dimension, np.nan)
    return OptRunResult(
        best_x=tracker.best_x,
        best_f=float(tracker.best_f),
        evals_used=tracker.used,
        history=tracker.history,
        seed=seed,
        wall_time=time.perf_counter() - t0,
        flagged_domain_errors=tracker.domain_errors,
    )


def random_search(problem: ProblemInstance, config: OptimizerConfig) -> OptRunResult:
    """Budget i.i.d. uniform samples within bounds; returns the incumbent best."""
    t0 = time.perf_counter()
    rng = np.random.Generator(np.random.PCG64(config.seed))
    tracker = _Tracker(problem, config.budget)
    try:
        while True:
            tracker(sample_uniform(problem.bounds, rng))
    except _BudgetExhausted:
        pass
    return _finish(tracker, config.seed, t0)


def nelder_mead(problem: ProblemInstance, x0, config: OptimizerConfig) -> OptRunResult:
    """Simplex descent from x0; unconstrained by design (may leave the bounds).

    The initial simplex perturbs each axis by 5% of the bound width.  A vertex
    that hits a formula singularity gets a +inf surrogate and the run continues.
    Stops on budget or when the simplex diameter falls below 1e-10.
    """
    t0 = time.perf_counter()
    x0 = np.asarray(x0, dtype=float)
    n = problem.dimension
    tracker = _Tracker(problem, config.budget)
    step = 0.05 * problem.bounds.width
    simplex = [x0.copy()]
    for i in range(n):
        v = x0.copy()
        v[i] += step[i] if step[i] != 0 else 0.05
        simplex.append(v)
    simplex = np.array(simplex)
    try:
        fvals = np.array([tracker(v) for v in simplex])
        while True:
            order = np.argsort(fvals, kind="stable")
            simplex, fvals = simplex[order], fvals[order]
            if np.max(np.abs(simplex[1:] - simplex[0])) < 1e-10:
                break
            centroid = np.mean(simplex[:-1], axis=0)
            worst = simplex[-1]
            reflected = centroid + config.reflection * (centroid - worst)
            f_r = tracker(reflected)
            if f_r < fvals[0]:
                expanded = centroid + config.expansion * (reflected - centroid)
                f_e = tracker(expanded)
                if f_e < f_r:
                    simplex[-1], fvals[-1] = expanded, f_e
                else:
                    simplex[-1], fvals[-1] = reflected, f_r
            elif f_r < fvals[-2]:
                simplex[-1], fvals[-1] = reflected, f_r
            else:
                if f_r < fvals[-1]:
                    contracted = centroid + config.contraction * (reflected - centroid)
                else:
                    contracted = centroid + config.contraction * (worst - centroid)
                f_c = tracker(contracted)
                if f_c < min(f_r, fvals[-1]):
                    simplex[-1], fvals[-1] = contracted, f_c
                else:
                    for i in range(1, n + 1):
                        simplex[i] = simplex[0] + config.shrink * (simplex[i] - simplex[0])
                        fvals[i] = tracker(simplex[i])
    except _BudgetExhausted:
        pass
    return _finish(tracker, config.seed, t0)


def differential_evolution(problem: ProblemInstance, config: OptimizerConfig) -> OptRunResult:
    """DE/rand/1/bin with reflection repair; every evaluated point stays in bounds."""
    t0 = time.perf_counter()
    rng = np.random.Generator(np.random.PCG64(config.seed))
    bounds = problem.bounds
    n = problem.dimension
    npop = config.population
    tracker = _Tracker(problem, config.budget)
    pop = np.array([sample_uniform(bounds, rng) for _ in range(npop)])
    try:
        fpop = np.array([tracker(ind) for ind in pop])
        while True:
            for i in range(npop):
                choices = [j for j in range(npop) if j != i]
                a, b, c = rng.choice(choices, size=3, replace=False)
                trial_v = pop[a] + config.F * (pop[b] - pop[c])
                trial_v = _reflect_into(trial_v, bounds)
                cross = rng.random(n) < config.CR
                cross[rng.integers(n)] = True
                trial = np.where(cross, trial_v, pop[i])
                f_t = tracker(trial)
                if f_t <= fpop[i]:
                    pop[i], fpop[i] = trial, f_t
    except _BudgetExhausted:
        pass
    return _finish(tracker, config.seed, t0)


def _reflect_into(x, bounds):
    lo, hi = bounds.lower, bounds.upper
    width = hi - lo
    y = (x - lo) % (2.0 * width)
    y = np.where(y > width, 2.0 * width - y, y)
    return lo + y


def run_optimizer(problem, config, x0=None):
    if config.kind == "random-search":
        return random_search(problem, config)
    if config.kind == "nelder-mead":
        if x0 is None:
            rng = np.random.Generator(np.random.PCG64(config.seed))
            x0 = sample_uniform(problem.bounds, rng)
        return nelder_mead(problem, x0, config)
    return differential_evolution(problem, config)


def run_suite(config: OptimizerConfig, function_names, dims, trials, seeds):
    """Cross-product of (function, dim, trial) runs; rows aggregate per-cell stats.

    ``seeds`` must provide one explicit seed per trial; each run derives its
    stream from (trial seed, function name, dim) so the table is reproducible
    from the seed list alone.  Per-run errors are recorded and the suite goes on.
    """
    if len(seeds) < trials:
        raise ValueError("one explicit seed per trial is required")
    rows = []
    for name in function_names:
        for dim in dims:
            from . import catalog

            entry = catalog.lookup(name)
            run_dim = dim
            if entry.meta.dim_class.kind == "fixed":
                run_dim = entry.meta.dim_class.n
            for trial in range(trials):
                mix = stable_function_seed(seeds[trial], f"{name}#{run_dim}")
                run_seed = int(mix.integers(0, 2**63 - 1))
                row = {
                    "function": name,
                    "dim": run_dim,
                    "trial": trial,
                    "seed": seeds[trial],
                }
                try:
                    problem = make_problem(
                        name, run_dim, seed=run_seed if entry.meta.properties.stochastic else None
                    )
                    result = run_optimizer(problem, replace(config, seed=run_seed))
                    row.update(result.as_dict(include_history=False))
                except Exception as exc:
                    row["error"] = f"{type(exc).__name__}: {exc}"
                rows.append(row)
    return rows


def summarize_suite(rows):
    """Mean/median/best/worst of best_f per (function, dim) cell."""
    cells = {}
    for row in rows:
        if "error" in row:
            continue
        cells.setdefault((row["function"], row["dim"]), []).append(row["best_f"])
    out = []
    for (name, dim), vals in sorted(cells.items()):
        arr = np.array(vals)
        out.append(
            {
                "function": name,
                "dim": dim,
                "trials": len(vals),
                "mean_best_f": float(np.mean(arr)),
                "median_best_f": float(np.median(arr)),
                "best_best_f": float(np.min(arr)),
                "worst_best_f": float(np.max(arr)),
            }
        )
    return out
