"""Building blocks for catalog entries: the entry record, label parsing, helpers."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..core import (
    ALL_EQUAL,
    BOTH,
    MULTIMODAL,
    PAPER_CLAIMED,
    UNIMODAL,
    UNKNOWN,
    VERIFIED,
    BoundsTemplate,
    DimClass,
    FunctionId,
    FunctionMeta,
    OptimumRecord,
    PropertySet,
    dim_power_bounds,
    per_coord_bounds,
    uniform_bounds,
)
from ..errors import DomainError


@dataclass(frozen=True)
class CatalogEntry:
    """A registered benchmark function: metadata plus its evaluation rule.

    ``body`` is fn(x) -> float for deterministic entries and fn(x, rng) for
    stochastic ones; tier-3 entries and the dynamic pair carry no plain body.
    """

    meta: FunctionMeta
    body: object = None
    params: dict = field(default_factory=dict)


_LABEL_TOKENS = {
    "C": ("continuous", True),
    "NC": ("continuous", False),
    "D": ("differentiable", True),
    "ND": ("differentiable", False),
    "S": ("separable", True),
    "PS": ("separable", True),  # "partially separable"; noted on the entry
    "NS": ("separable", False),
    "SC": ("scalable", True),
    "NSC": ("scalable", False),
    "U": ("modality", UNIMODAL),
    "M": ("modality", MULTIMODAL),
    "ST": ("stochastic", True),
    "DY": ("dynamic", True),
}


def labels(spec: str = "") -> PropertySet:
    """Decode a compact property-label string, e.g. "C D NS SC M".

    Unstated facets default to continuous/differentiable True, separable False,
    scalable False, modality unknown — the same shape most unlabeled entries
    in the source take.
    """
    kwargs = {}
    for token in spec.split():
        key, value = _LABEL_TOKENS[token]
        kwargs[key] = value
    if kwargs.get("dynamic"):
        kwargs["stochastic"] = True
    return PropertySet(**kwargs)


def om(value, loc=None, prov=PAPER_CLAIMED, dim="any", tol=1e-6, note=""):
    """Shorthand OptimumRecord constructor used throughout the definitions."""
    if isinstance(loc, (list, np.ndarray)):
        loc = tuple(float(v) for v in loc)
    if isinstance(loc, tuple) and len(loc) == 2 and loc[0] == "all":
        loc = (ALL_EQUAL, float(loc[1]))
        if dim == "any":
            pass
    elif loc is not None and not (isinstance(loc, tuple) and loc and loc[0] == ALL_EQUAL):
        loc = tuple(float(v) for v in loc)
        if dim == "any":
            dim = len(loc)
    return OptimumRecord(value=float(value), location=loc, provenance=prov, dimension=dim, tol=tol, note=note)


def entry(
    name,
    body=None,
    *,
    bounds,
    dim,
    props="",
    aliases=(),
    optima=(),
    tier=2,
    params=None,
    constants=None,
    notes=(),
    tier3_reason="",
):
    """Assemble a CatalogEntry.

    ``bounds``: (lo, hi) pair, list of per-coordinate pairs, or a BoundsTemplate.
    ``dim``: int for fixed dimension, or ("scalable", min_dim[, multiple]).
    ``props``: label string for :func:`labels`, or a PropertySet.
    """
    if isinstance(bounds, BoundsTemplate):
        template = bounds
    elif isinstance(bounds, tuple) and len(bounds) == 2 and np.isscalar(bounds[0]):
        template = uniform_bounds(*bounds)
    else:
        template = per_coord_bounds(*bounds)
    if isinstance(dim, int):
        dim_class = DimClass.fixed(dim)
    else:
        kind, *rest = dim
        if kind != "scalable":
            raise ValueError(f"bad dim spec for {name}: {dim}")
        min_dim = rest[0] if rest else 1
        multiple = rest[1] if len(rest) > 1 else 1
        dim_class = DimClass.scalable(min_dim, multiple)
    prop_set = props if isinstance(props, PropertySet) else labels(props)
    if tier == 3 and not tier3_reason:
        raise ValueError(f"{name}: tier 3 requires a reason")
    meta = FunctionMeta(
        id=FunctionId(name, tuple(aliases)),
        properties=prop_set,
        default_bounds=template,
        dim_class=dim_class,
        optima=tuple(optima),
        tier=tier,
        constants=constants,
        discrepancy_notes=tuple(notes),
        tier3_reason=tier3_reason,
    )
    return CatalogEntry(meta=meta, body=body, params=dict(params or {}))


# --- numeric helpers shared by the definitions -------------------------------


def powsign(x, p):
    """Sign-preserving power |x|**p * sign(x); keeps odd-power-like terms real."""
    return np.sign(x) * np.abs(x) ** p


def powabs(x, p):
    """|x|**p with the 0**0 := 1 convention."""
    x = np.abs(np.asarray(x, dtype=float))
    p = np.asarray(p, dtype=float)
    out = np.where((x == 0.0) & (p == 0.0), 1.0, x**p)
    return out


def require(cond, name, what):
    """Raise DomainError unless cond holds everywhere."""
    if not np.all(cond):
        raise DomainError(f"{name}: {what}")


def nonzero(x, name, what="division by zero"):
    require(np.all(np.asarray(x) != 0.0), name, what)
    return x


__all__ = [
    "CatalogEntry",
    "entry",
    "labels",
    "om",
    "powsign",
    "powabs",
    "require",
    "nonzero",
    "PAPER_CLAIMED",
    "VERIFIED",
    "BOTH",
    "uniform_bounds",
    "per_coord_bounds",
    "dim_power_bounds",
]
