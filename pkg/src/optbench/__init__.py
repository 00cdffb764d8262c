"""optbench: a benchmark-function suite for global optimization.

Three hundred plus catalog entries with machine-readable metadata, a
verification engine that audits every published optimum and property label,
baseline metaheuristics (random search, Nelder-Mead, differential evolution),
two dynamic objectives with reproducible state drift, and a CLI.
"""

from . import catalog, dynamic, optimize, verify
from .core import (
    Bounds,
    DimClass,
    FunctionId,
    FunctionMeta,
    OptimumRecord,
    ProblemInstance,
    PropertySet,
    evaluate,
    gradient_fd,
    make_problem,
    sample_uniform,
)
from .errors import (
    BadDimension,
    CorruptSnapshot,
    DimensionMismatch,
    DomainError,
    MissingSeed,
    NonFiniteInput,
    OptbenchError,
    SpecError,
    StochasticGradientUnsupported,
    StochasticUnverifiable,
    Tier3Unimplementable,
    UnknownFunction,
)
from .optimize import OptimizerConfig, OptRunResult, differential_evolution, nelder_mead, random_search, run_suite

__version__ = "0.1.0"
