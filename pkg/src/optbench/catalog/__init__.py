"""Registry of every catalog entry, with lookup, filtered listing, and stats.

The registry is assembled once at import and is immutable afterwards; lookups
resolve canonical names and aliases alike.
"""

from __future__ import annotations

from ..errors import UnknownFunction
from . import defs_a_c, defs_d_g, defs_h_m, defs_n_r, defs_s_z
from .constants import CONSTANT_TABLES
from .model import CatalogEntry

_REGISTRY: dict[str, CatalogEntry] = {}
_ALIASES: dict[str, str] = {}

for _module in (defs_a_c, defs_d_g, defs_h_m, defs_n_r, defs_s_z):
    for _entry in _module.DEFS:
        name = _entry.meta.name
        if name in _REGISTRY:
            raise RuntimeError(f"duplicate canonical name: {name}")
        _REGISTRY[name] = _entry

for _entry in _REGISTRY.values():
    for _alias in _entry.meta.id.aliases:
        if _alias in _REGISTRY or _alias in _ALIASES:
            raise RuntimeError(f"alias collides with an existing name: {_alias}")
        _ALIASES[_alias] = _entry.meta.name


def lookup(name: str) -> CatalogEntry:
    """Resolve a canonical name or alias to its entry."""
    key = name.strip().lower()
    if key in _REGISTRY:
        return _REGISTRY[key]
    if key in _ALIASES:
        return _REGISTRY[_ALIASES[key]]
    raise UnknownFunction(f"no registered function named {name!r}")


def all_entries() -> list[CatalogEntry]:
    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def list_entries(
    predicate=None,
    *,
    tier=None,
    modality=None,
    continuous=None,
    differentiable=None,
    separable=None,
    scalable=None,
    stochastic=None,
    dynamic=None,
    dim=None,
):
    """Canonical names of all entries matching the filters, sorted."""
    out = []
    for entry in all_entries():
        meta = entry.meta
        p = meta.properties
        if tier is not None and meta.tier != tier:
            continue
        if modality is not None and p.modality != modality:
            continue
        if continuous is not None and p.continuous != continuous:
            continue
        if differentiable is not None and p.differentiable != differentiable:
            continue
        if separable is not None and p.separable != separable:
            continue
        if scalable is not None and p.scalable != scalable:
            continue
        if stochastic is not None and p.stochastic != stochastic:
            continue
        if dynamic is not None and p.dynamic != dynamic:
            continue
        if dim is not None:
            dc = meta.dim_class
            if dc.kind == "fixed":
                if dc.n != dim:
                    continue
            elif dim < dc.min_dim or dim % dc.multiple != 0:
                continue
        if predicate is not None and not predicate(meta):
            continue
        out.append(meta.name)
    return out


def catalog_stats() -> dict:
    """Counts per tier and per property flag, consistent with list_entries."""
    entries = all_entries()
    stats = {
        "total": len(entries),
        "tiers": {t: sum(1 for e in entries if e.meta.tier == t) for t in (1, 2, 3)},
        "modality": {
            m: sum(1 for e in entries if e.meta.properties.modality == m)
            for m in ("unimodal", "multimodal", "unknown")
        },
        "continuous": sum(1 for e in entries if e.meta.properties.continuous),
        "differentiable": sum(1 for e in entries if e.meta.properties.differentiable),
        "separable": sum(1 for e in entries if e.meta.properties.separable),
        "scalable": sum(1 for e in entries if e.meta.properties.scalable),
        "stochastic": sum(1 for e in entries if e.meta.properties.stochastic),
        "dynamic": sum(1 for e in entries if e.meta.properties.dynamic),
        "aliases": len(_ALIASES),
    }
    return stats


def constant_table(name: str) -> dict:
    if name not in CONSTANT_TABLES:
        raise UnknownFunction(f"no constant table named {name!r}")
    return CONSTANT_TABLES[name]


__all__ = [
    "CatalogEntry",
    "lookup",
    "all_entries",
    "list_entries",
    "catalog_stats",
    "constant_table",
    "CONSTANT_TABLES",
]
