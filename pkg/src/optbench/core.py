"""Function-evaluation contract, metadata model, bounds, and randomness plumbing.

Every registered benchmark function is described by a :class:`FunctionMeta` and
evaluated through a :class:`ProblemInstance`, which binds the function to a
concrete dimension, bounds, and (for noisy entries) a seeded random stream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    DomainError,
    MissingSeed,
    NonFiniteInput,
    StochasticGradientUnsupported,
    Tier3Unimplementable,
)

UNIMODAL = "unimodal"
MULTIMODAL = "multimodal"
UNKNOWN = "unknown"

PAPER_CLAIMED = "paper-claimed"
VERIFIED = "verified"
BOTH = "both"


@dataclass(frozen=True)
class FunctionId:
    """Canonical lowercase-hyphenated name plus its aliases."""

    canonical_name: str
    aliases: tuple[str, ...] = ()

    def __post_init__(self):
        if self.canonical_name != self.canonical_name.lower():
            raise ValueError(f"canonical name must be lowercase: {self.canonical_name}")


@dataclass(frozen=True)
class PropertySet:
    """Property labels as published; contradictions are noted, never patched here."""

    continuous: bool = True
    differentiable: bool = True
    separable: bool = False
    scalable: bool = False
    modality: str = UNKNOWN
    stochastic: bool = False
    dynamic: bool = False

    def __post_init__(self):
        if self.modality not in (UNIMODAL, MULTIMODAL, UNKNOWN):
            raise ValueError(f"bad modality: {self.modality}")
        if self.dynamic and not self.stochastic:
            raise ValueError("dynamic functions inject noise: dynamic implies stochastic")


@dataclass(frozen=True)
class Bounds:
    """Per-coordinate search region. Lower must be strictly below upper."""

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lower, dtype=float)
        hi = np.asarray(self.upper, dtype=float)
        if lo.shape != hi.shape or lo.ndim != 1:
            raise ValueError("bounds must be 1-D arrays of equal length")
        if not np.all(lo < hi):
            raise ValueError("lower bound must be strictly below upper bound")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def dimension(self) -> int:
        return self.lower.size

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(x >= self.lower) and np.all(x <= self.upper))

    @staticmethod
    def uniform(lo: float, hi: float, dimension: int) -> "Bounds":
        return Bounds(np.full(dimension, float(lo)), np.full(dimension, float(hi)))


@dataclass(frozen=True)
class BoundsTemplate:
    """Default-bounds rule, broadcast to a concrete dimension at bind time.

    mode "uniform":   one (lo, hi) pair for every coordinate.
    mode "per-coord": explicit pair list for fixed-dimension functions.
    mode "dim-power": lo = -scale * d**power, hi = +scale * d**power (Trid, Perm).
    """

    mode: str = "uniform"
    lo: float = -1.0
    hi: float = 1.0
    pairs: tuple[tuple[float, float], ...] = ()
    scale: float = 1.0
    power: float = 1.0

    def bind(self, dimension: int) -> Bounds:
        if self.mode == "uniform":
            return Bounds.uniform(self.lo, self.hi, dimension)
        if self.mode == "per-coord":
            pairs = self.pairs
            if len(pairs) != dimension:
                raise DimensionMismatch(
                    f"per-coordinate bounds are {len(pairs)}-dimensional, got {dimension}"
                )
            lo = np.array([p[0] for p in pairs], dtype=float)
            hi = np.array([p[1] for p in pairs], dtype=float)
            return Bounds(lo, hi)
        if self.mode == "dim-power":
            extent = self.scale * float(dimension) ** self.power
            return Bounds.uniform(-extent, extent, dimension)
        raise ValueError(f"unknown bounds mode {self.mode}")

    def describe(self) -> dict:
        if self.mode == "uniform":
            return {"mode": "uniform", "lower": self.lo, "upper": self.hi}
        if self.mode == "per-coord":
            return {"mode": "per-coord", "pairs": [list(p) for p in self.pairs]}
        return {"mode": "dim-power", "scale": self.scale, "power": self.power}


def uniform_bounds(lo, hi):
    return BoundsTemplate(mode="uniform", lo=float(lo), hi=float(hi))


def per_coord_bounds(*pairs):
    return BoundsTemplate(mode="per-coord", pairs=tuple((float(a), float(b)) for a, b in pairs))


def dim_power_bounds(scale=1.0, power=1.0):
    return BoundsTemplate(mode="dim-power", scale=float(scale), power=float(power))


ALL_EQUAL = "all-equal"


@dataclass(frozen=True)
class OptimumRecord:
    """One claimed or verified optimum.

    ``location`` is a concrete vector, the symbolic pair ("all-equal", v) for
    any-dimension minimizers, or None for value-only claims.  ``provenance``
    states whether the record was published, numerically reproduced, or both;
    a provenance that includes "verified" guarantees only that evaluating at
    ``location`` reproduces ``value`` within ``tol`` — global optimality is the
    verify module's concern.
    """

    value: float
    location: object = None
    provenance: str = PAPER_CLAIMED
    dimension: object = "any"
    tol: float = 1e-6
    note: str = ""

    def __post_init__(self):
        if self.provenance not in (PAPER_CLAIMED, VERIFIED, BOTH):
            raise ValueError(f"bad provenance: {self.provenance}")

    def location_at(self, dimension: int):
        """Materialize the stored location for a concrete dimension, or None."""
        if self.location is None:
            return None
        if isinstance(self.location, tuple) and len(self.location) == 2 and self.location[0] == ALL_EQUAL:
            return np.full(dimension, float(self.location[1]))
        loc = np.asarray(self.location, dtype=float)
        if loc.size != dimension:
            return None
        return loc

    def applies_to(self, dimension: int) -> bool:
        if self.dimension == "any":
            return self.location_at(dimension) is not None or self.location is None
        return int(self.dimension) == int(dimension)


@dataclass(frozen=True)
class DimClass:
    """Either fixed(n) or scalable(min_dim); some scalable entries also require
    the dimension to be a multiple of a block size (Lennard-Jones, Powell)."""

    kind: str
    n: int = 0
    min_dim: int = 1
    multiple: int = 1

    @staticmethod
    def fixed(n: int) -> "DimClass":
        return DimClass(kind="fixed", n=n)

    @staticmethod
    def scalable(min_dim: int = 1, multiple: int = 1) -> "DimClass":
        return DimClass(kind="scalable", min_dim=min_dim, multiple=multiple)

    def validate(self, dimension: int, name: str):
        if dimension < 1:
            raise DimensionMismatch(f"{name}: dimension must be positive, got {dimension}")
        if self.kind == "fixed":
            if dimension != self.n:
                raise DimensionMismatch(f"{name} is fixed {self.n}-dimensional, got {dimension}")
        else:
            if dimension < self.min_dim:
                raise DimensionMismatch(
                    f"{name} requires dimension >= {self.min_dim}, got {dimension}"
                )
            if dimension % self.multiple != 0:
                raise DimensionMismatch(
                    f"{name} requires the dimension to be a multiple of {self.multiple}"
                )

    def default_dimension(self) -> int:
        return self.n if self.kind == "fixed" else max(self.min_dim, 2)

    def describe(self) -> dict:
        if self.kind == "fixed":
            return {"kind": "fixed", "n": self.n}
        d = {"kind": "scalable", "min_dim": self.min_dim}
        if self.multiple != 1:
            d["multiple"] = self.multiple
        return d


@dataclass(frozen=True)
class FunctionMeta:
    """Identity, property flags, bounds template, dimension class, optima, tier."""

    id: FunctionId
    properties: PropertySet
    default_bounds: BoundsTemplate
    dim_class: DimClass
    optima: tuple[OptimumRecord, ...] = ()
    tier: int = 2
    constants: str | None = None
    discrepancy_notes: tuple[str, ...] = ()
    tier3_reason: str = ""

    @property
    def name(self) -> str:
        return self.id.canonical_name

    def __post_init__(self):
        if self.tier not in (1, 2, 3):
            raise ValueError(f"bad tier: {self.tier}")
        if self.tier == 3 and not self.tier3_reason:
            raise ValueError(f"{self.name}: tier-3 entries must state a reason")


class ProblemInstance:
    """A registered function bound to a concrete dimension and bounds.

    Deterministic instances are immutable value-wise and shareable; the
    evaluation counter is bookkeeping, accurate under single-owner use (which
    is how the optimizers and the verifier drive it).  Stochastic and dynamic
    instances own a private stream and must not be shared between workers.
    """

    def __init__(self, meta: FunctionMeta, dimension: int, bounds: Bounds, seed=None):
        from . import catalog  # late import: catalog depends on this module

        entry = catalog.lookup(meta.name)
        self.meta = meta
        self.entry = entry
        self.dimension = int(dimension)
        self.bounds = bounds
        self.seed = seed
        self.eval_count = 0
        self._rng = None
        self._session = None
        if meta.properties.dynamic:
            from . import dynamic

            kind = "ddb" if meta.name == "dynamic-deceptive-basin" else "cddb"
            self._session = dynamic.init_session(kind, self.dimension, seed=int(seed))
        elif meta.properties.stochastic:
            self._rng = np.random.Generator(np.random.PCG64(int(seed)))

    @property
    def is_deterministic(self) -> bool:
        return not self.meta.properties.stochastic

    @property
    def session(self):
        return self._session

    def __repr__(self):
        return f"ProblemInstance({self.meta.name!r}, dim={self.dimension})"


def make_problem(name: str, dimension: int, seed=None, bounds_override: Bounds | None = None) -> ProblemInstance:
    """Bind a catalog entry to a dimension, validating tier, dims, and seeding."""
    from . import catalog

    entry = catalog.lookup(name)
    meta = entry.meta
    if meta.tier == 3:
        raise Tier3Unimplementable(meta.name, meta.tier3_reason)
    meta.dim_class.validate(dimension, meta.name)
    if meta.properties.stochastic and seed is None:
        raise MissingSeed(f"{meta.name} is stochastic; a seed is required")
    if bounds_override is not None:
        if bounds_override.dimension != dimension:
            raise DimensionMismatch("bounds_override length must equal dimension")
        bounds = bounds_override
    else:
        bounds = meta.default_bounds.bind(dimension)
    return ProblemInstance(meta, dimension, bounds, seed=seed)


def evaluate(problem: ProblemInstance, x) -> float:
    """Evaluate the bound function at x.

    Out-of-bounds x is permitted (bounds are a search region, not a domain
    restriction); non-finite x is rejected; formula singularities raise
    DomainError rather than substituting limits.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (problem.dimension,):
        raise DimensionMismatch(
            f"{problem.meta.name}: expected a length-{problem.dimension} vector, got shape {x.shape}"
        )
    if not np.all(np.isfinite(x)):
        raise NonFiniteInput(f"{problem.meta.name}: input contains NaN or infinity")
    problem.eval_count += 1
    entry = problem.entry
    if problem._session is not None:
        from . import dynamic

        if problem._session.kind == "ddb":
            return dynamic.eval_ddb(problem._session, x)
        return dynamic.eval_cddb(problem._session, x)
    if problem._rng is not None:
        return float(entry.body(x, problem._rng))
    return float(entry.body(x))


def gradient_fd(problem: ProblemInstance, x, h: float = 1e-6) -> np.ndarray:
    """Central-difference gradient, component i = (f(x+h e_i) - f(x-h e_i)) / (2h).

    Callers are expected to restrict this to entries labeled continuous; the
    smoothness probe deliberately runs it on contradictory labels to expose them.
    """
    if problem.meta.properties.stochastic:
        raise StochasticGradientUnsupported(
            f"{problem.meta.name}: finite differences on a noisy objective are meaningless"
        )
    if not (h > 0):
        raise ValueError("h must be positive")
    x = np.asarray(x, dtype=float)
    grad = np.empty(problem.dimension)
    for i in range(problem.dimension):
        step = np.zeros(problem.dimension)
        step[i] = h
        grad[i] = (evaluate(problem, x + step) - evaluate(problem, x - step)) / (2.0 * h)
    return grad


def sample_uniform(bounds: Bounds, stream: np.random.Generator) -> np.ndarray:
    """One point, each coordinate i.i.d. uniform on [lower_i, upper_i]."""
    return stream.uniform(bounds.lower, bounds.upper)


def stable_function_seed(seed: int, name: str) -> np.random.Generator:
    """Stream derived from (seed, function id); stable across runs and processes."""
    digest = 0
    for ch in name:
        digest = (digest * 131 + ord(ch)) % (2**63)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(seed), digest])))


def latin_hypercube(bounds: Bounds, n: int, rng: np.random.Generator) -> np.ndarray:
    """n stratified samples in bounds, one stratum per sample and coordinate."""
    d = bounds.dimension
    u = (rng.random((n, d)) + np.stack([rng.permutation(n) for _ in range(d)], axis=1)) / n
    return bounds.lower + u * (bounds.upper - bounds.lower)


def finite_or_domain_error(value: float, name: str, what: str = "value") -> float:
    if not math.isfinite(value):
        raise DomainError(f"{name}: non-finite {what}")
    return value
