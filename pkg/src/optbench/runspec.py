"""Declarative run descriptions: [section] headers over key = value lines.

Unknown sections or keys are rejected outright, and seeds must always be
explicit — there are no wall-clock defaults anywhere.
"""

from __future__ import annotations

import configparser

from . import catalog
from .errors import SpecError
from .optimize import OptimizerConfig

_OPTIMIZER_KINDS = {
    "de": "differential-evolution",
    "differential-evolution": "differential-evolution",
    "nm": "nelder-mead",
    "nelder-mead": "nelder-mead",
    "rs": "random-search",
    "random-search": "random-search",
}

_SUITE_KEYS = {"functions", "dims", "trials", "seeds", "output", "history"}
_OPTIMIZER_KEYS = {"kind", "budget", "population", "F", "CR", "reflection", "expansion", "contraction", "shrink"}


def resolve_optimizer_kind(token: str) -> str:
    kind = _OPTIMIZER_KINDS.get(token.strip().lower())
    if kind is None:
        raise SpecError(f"unknown optimizer {token!r}")
    return kind


def _split_list(raw):
    return [tok.strip() for tok in raw.replace(",", " ").split() if tok.strip()]


def resolve_function_set(tokens):
    """Expand function tokens; 'tier1'/'tier2' and 'top25' select whole tiers."""
    names = []
    for tok in tokens:
        low = tok.lower()
        if low in ("tier1", "top25"):
            names.extend(n for n in catalog.list_entries(tier=1) if not catalog.lookup(n).meta.properties.dynamic)
            if low == "tier1":
                names.extend(n for n in catalog.list_entries(tier=1) if catalog.lookup(n).meta.properties.dynamic)
        elif low == "tier2":
            names.extend(catalog.list_entries(tier=2))
        else:
            names.append(catalog.lookup(tok).meta.name)
    seen, out = set(), []
    for n in names:
        if n not in seen:
            seen.add(n)
            out.append(n)
    return out


def parse_runspec(path):
    """Parse a spec file into (suite options dict, OptimizerConfig)."""
    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    try:
        with open(path) as fh:
            parser.read_file(fh)
    except OSError as exc:
        raise SpecError(f"cannot read spec file: {exc}") from exc
    except configparser.Error as exc:
        raise SpecError(f"malformed spec file: {exc}") from exc

    for section in parser.sections():
        if section not in ("suite", "optimizer"):
            raise SpecError(f"unknown section [{section}]")
    if not parser.has_section("suite") or not parser.has_section("optimizer"):
        raise SpecError("spec needs both a [suite] and an [optimizer] section")
    for key in parser["suite"]:
        if key not in _SUITE_KEYS:
            raise SpecError(f"unknown key {key!r} in [suite]")
    for key in parser["optimizer"]:
        if key not in _OPTIMIZER_KEYS:
            raise SpecError(f"unknown key {key!r} in [optimizer]")

    suite_raw = parser["suite"]
    opt_raw = parser["optimizer"]
    if "seeds" not in suite_raw:
        raise SpecError("seeds must be explicit in [suite]")
    if "functions" not in suite_raw:
        raise SpecError("[suite] must list functions")
    if "kind" not in opt_raw or "budget" not in opt_raw:
        raise SpecError("[optimizer] must state kind and budget")

    try:
        seeds = [int(s) for s in _split_list(suite_raw["seeds"])]
        dims = [int(s) for s in _split_list(suite_raw.get("dims", "2"))]
        trials = int(suite_raw.get("trials", str(len(seeds))))
    except ValueError as exc:
        raise SpecError(f"bad numeric value in [suite]: {exc}") from exc
    if trials > len(seeds):
        raise SpecError("one explicit seed per trial is required")

    functions = resolve_function_set(_split_list(suite_raw["functions"]))
    suite = {
        "functions": functions,
        "dims": dims,
        "trials": trials,
        "seeds": seeds,
        "output": suite_raw.get("output"),
        "history": suite_raw.get("history", "false").lower() in ("1", "true", "yes"),
    }

    try:
        config = OptimizerConfig(
            kind=resolve_optimizer_kind(opt_raw["kind"]),
            budget=int(opt_raw["budget"]),
            population=int(opt_raw.get("population", "50")),
            F=float(opt_raw.get("F", "0.5")),
            CR=float(opt_raw.get("CR", "0.9")),
            reflection=float(opt_raw.get("reflection", "1.0")),
            expansion=float(opt_raw.get("expansion", "2.0")),
            contraction=float(opt_raw.get("contraction", "0.5")),
            shrink=float(opt_raw.get("shrink", "0.5")),
        )
    except ValueError as exc:
        raise SpecError(f"bad optimizer configuration: {exc}") from exc
    return suite, config
