"""Exception hierarchy shared across the suite."""


class OptbenchError(Exception):
    """Base class for all library errors."""


class UnknownFunction(OptbenchError):
    """Name or alias does not resolve to a registered function."""


class DimensionMismatch(OptbenchError):
    """Requested dimension is incompatible with the function's dimension class."""


class Tier3Unimplementable(OptbenchError):
    """The entry is registered but has no evaluable body."""

    def __init__(self, name, reason):
        super().__init__(f"{name}: {reason}")
        self.name = name
        self.reason = reason


class MissingSeed(OptbenchError):
    """Stochastic function instantiated without a seed."""


class DomainError(OptbenchError):
    """The formula is undefined at the requested point."""


class NonFiniteInput(OptbenchError):
    """Input vector contains NaN or infinity."""


class StochasticGradientUnsupported(OptbenchError):
    """Finite-difference gradients are not defined for noisy objectives."""


class StochasticUnverifiable(OptbenchError):
    """Optimum audits require a deterministic objective."""


class BadDimension(OptbenchError):
    """Dynamic session constructed with an unsupported dimension."""


class CorruptSnapshot(OptbenchError):
    """Snapshot blob is truncated, tampered with, or from an unknown version."""


class SpecError(OptbenchError):
    """Run-spec file is malformed (unknown key, missing seed, bad value)."""
